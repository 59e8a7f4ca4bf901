#include <cctype>
#include <string>

#include "frieze_lab/boundary.hpp"
#include "frieze_lab/error.hpp"

namespace frieze_lab {

namespace {

[[noreturn]] void fail(const std::string& why) { throw Error("boundary grammar: " + why); }

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool consume(std::string_view& s, std::string_view token) {
  s = trim(s);
  if (s.substr(0, token.size()) != token) return false;
  s.remove_prefix(token.size());
  return true;
}

// Splits on whitespace outside parentheses.
std::vector<std::string> tokens(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth < 0) fail("unbalanced parentheses");
    if (std::isspace(static_cast<unsigned char>(c)) && depth == 0) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (depth != 0) fail("unbalanced parentheses");
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

bool is_letters(const std::string& t) {
  return !t.empty() && t.find_first_not_of("xy") == std::string::npos;
}

// Values and letters in order; values[i] precedes letters[i]. A trailing
// value, if any, is returned separately.
struct Sequence {
  std::vector<RationalFunction> values;
  std::vector<Letter> letters;
  std::optional<RationalFunction> trailing;
};

Sequence read_sequence(std::string_view text) {
  Sequence seq;
  std::optional<RationalFunction> pending;
  for (const auto& t : tokens(text)) {
    if (is_letters(t)) {
      for (char c : t) {
        seq.values.push_back(pending.value_or(RationalFunction(1)));
        seq.letters.push_back(Letter(c));
        pending.reset();
      }
    } else {
      if (pending) fail("two values without a letter between them");
      pending = RationalFunction::parse(t);
    }
  }
  seq.trailing = std::move(pending);
  return seq;
}

Generator read_generator(std::string_view text) {
  Sequence seq = read_sequence(text);
  if (seq.letters.empty()) fail("generator has no letters");
  if (seq.trailing && !(*seq.trailing == seq.values.front()))
    fail("generator's closing value must repeat its first value");
  return {std::move(seq.values), std::move(seq.letters)};
}

// Text inside the parenthesis group that starts s, which is consumed.
std::string_view group(std::string_view& s) {
  s = trim(s);
  if (s.empty() || s.front() != '(') fail("expected '('");
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    depth += (s[i] == '(') - (s[i] == ')');
    if (depth == 0) {
      std::string_view inner = s.substr(1, i - 1);
      s.remove_prefix(i + 1);
      return inner;
    }
  }
  fail("unbalanced parentheses");
}

}  // namespace

BoundaryWord parse_boundary(std::string_view text) {
  std::string_view s = text;
  if (!consume(s, "^inf")) fail("must start with ^inf(");
  Generator left = read_generator(group(s));
  s = trim(s);
  if (consume(s, "^inf")) {
    if (!trim(s).empty()) fail("trailing text after ^inf");
    return BoundaryWord::periodic(std::move(left));
  }
  // The root runs up to the last top-level '(' before the closing ^inf.
  if (s.size() < 4 || s.substr(s.size() - 4) != "^inf") fail("must end with )^inf");
  std::string_view body = trim(s.substr(0, s.size() - 4));
  if (body.empty() || body.back() != ')') fail("expected ')' before ^inf");
  int depth = 0;
  std::size_t open = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 0;) {
    depth += (body[i] == ')') - (body[i] == '(');
    if (depth == 0) {
      open = i;
      break;
    }
  }
  if (open == std::string_view::npos) fail("unbalanced parentheses");
  std::string_view rest = body.substr(open);
  Generator right = read_generator(group(rest));
  Sequence root_seq = read_sequence(body.substr(0, open));
  FiniteWord root{std::move(root_seq.values), std::move(root_seq.letters)};
  root.values.push_back(root_seq.trailing.value_or(RationalFunction(1)));
  return BoundaryWord::bi_generated(std::move(left), std::move(root), std::move(right));
}

}  // namespace frieze_lab
