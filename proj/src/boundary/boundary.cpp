#include "frieze_lab/boundary.hpp"

#include <algorithm>
#include <sstream>

#include "frieze_lab/error.hpp"

namespace frieze_lab {

namespace {

long floor_mod(long i, long n) {
  long r = i % n;
  return r < 0 ? r + n : r;
}

long floor_div(long i, long n) { return (i - floor_mod(i, n)) / n; }

void check_generator(const Generator& g, const char* which) {
  if (g.letters.empty()) throw Error(std::string(which) + " generator is empty");
  if (g.values.size() != g.letters.size())
    throw Error(std::string(which) + " generator needs one value per letter");
}

std::string value_token(const RationalFunction& f) {
  std::string s = f.to_string();
  int depth = 0;
  for (char c : s) {
    depth += (c == '(') - (c == ')');
    if (c == ' ' && depth == 0) return "(" + s + ")";
  }
  return s;
}

void write_values(std::ostringstream& os, const std::vector<RationalFunction>& values,
                  const std::vector<Letter>& letters, bool closing_value) {
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) os << ' ';
    os << value_token(values[i]) << ' ' << char(letters[i]);
  }
  if (closing_value) os << (letters.empty() ? "" : " ") << value_token(values.back());
}

}  // namespace

bool Generator::has_both_letters() const {
  return std::count(letters.begin(), letters.end(), Letter::X) > 0 &&
         std::count(letters.begin(), letters.end(), Letter::Y) > 0;
}

BoundaryWord BoundaryWord::periodic(Generator g) {
  check_generator(g, "periodic");
  BoundaryWord w;
  w.left_ = g;
  w.right_ = std::move(g);
  return w;
}

BoundaryWord BoundaryWord::bi_generated(Generator left, FiniteWord root, Generator right) {
  check_generator(left, "left");
  check_generator(right, "right");
  if (root.values.size() != root.letters.size() + 1) throw Error("root needs one more value than letters");
  if (!(left.values.front() == root.values.front()))
    throw Error("left generator must start with the first root value");
  if (!(right.values.front() == root.values.back()))
    throw Error("right generator must start with the last root value");
  BoundaryWord w;
  w.left_ = std::move(left);
  w.right_ = std::move(right);
  w.root_ = std::move(root);
  return w;
}

const RationalFunction& BoundaryWord::value(long i) const {
  const long m = root_length();
  if (!root_) return left_.values[floor_mod(i, long(left_.values.size()))];
  if (i < 0) return left_.values[floor_mod(i, long(left_.values.size()))];
  if (i <= m) return root_->values[i];
  return right_.values[(i - m) % long(right_.values.size())];
}

Letter BoundaryWord::letter(long i) const {
  const long m = root_length();
  if (!root_ || i < 0) return left_.letters[floor_mod(i, long(left_.letters.size()))];
  if (i < m) return root_->letters[i];
  return right_.letters[(i - m) % long(right_.letters.size())];
}

bool BoundaryWord::is_admissible() const { return left_.has_both_letters() && right_.has_both_letters(); }

BoundaryWord BoundaryWord::map_values(const std::function<RationalFunction(const RationalFunction&)>& f) const {
  BoundaryWord w = *this;
  for (auto* vals : {&w.left_.values, &w.right_.values})
    for (auto& v : *vals) v = f(v);
  if (w.root_)
    for (auto& v : w.root_->values) v = f(v);
  return w;
}

std::string BoundaryWord::to_string() const {
  std::ostringstream os;
  os << "^inf(";
  write_values(os, left_.values, left_.letters, false);
  os << ")";
  if (root_) {
    os << ' ';
    write_values(os, root_->values, root_->letters, true);
    os << " (";
    write_values(os, right_.values, right_.letters, false);
    os << ")";
  }
  os << "^inf";
  return os.str();
}

std::vector<BoundaryEmbedding::Step> BoundaryEmbedding::prefix(const std::vector<Letter>& letters) {
  std::vector<Step> p(letters.size() + 1);
  for (std::size_t i = 0; i < letters.size(); ++i) {
    p[i + 1] = p[i];
    if (letters[i] == Letter::X)
      ++p[i + 1].dc;
    else
      --p[i + 1].dr;
  }
  return p;
}

BoundaryEmbedding::BoundaryEmbedding(BoundaryWord word) : word_(std::move(word)) {
  if (!word_.is_admissible()) throw Error("boundary is not admissible: each tail needs both letters");
  left_prefix_ = prefix(word_.left().letters);
  right_prefix_ = prefix(word_.right().letters);
  if (word_.root()) root_prefix_ = prefix(word_.root()->letters);
}

Point BoundaryEmbedding::coord(long i) const {
  const long m = word_.root_length();
  auto periodic = [](const std::vector<Step>& p, long j, Point base) {
    const long len = long(p.size()) - 1;
    const long q = floor_div(j, len), r = floor_mod(j, len);
    return Point{base.col + q * p.back().dc + p[r].dc, base.row + q * p.back().dr + p[r].dr};
  };
  if (!word_.root() || i < 0) return periodic(left_prefix_, i, {0, 0});
  if (i <= m) return {root_prefix_[i].dc, root_prefix_[i].dr};
  return periodic(right_prefix_, i - m, {root_prefix_[m].dc, root_prefix_[m].dr});
}

// Largest i with pred(i), for pred true on a left ray and false on a right ray.
template <class Pred>
long BoundaryEmbedding::last_index_where(Pred pred) const {
  constexpr long kLimit = 1L << 50;
  long lo, hi, step = 1;
  if (pred(0)) {
    lo = 0;
    while (pred(lo + step)) {
      lo += step;
      if ((step *= 2) > kLimit) throw Error("boundary search diverged");
    }
    hi = lo + step;
  } else {
    hi = 0;
    while (!pred(hi - step)) {
      hi -= step;
      if ((step *= 2) > kLimit) throw Error("boundary search diverged");
    }
    lo = hi - step;
  }
  while (hi - lo > 1) {
    long mid = lo + (hi - lo) / 2;
    (pred(mid) ? lo : hi) = mid;
  }
  return lo;
}

long BoundaryEmbedding::last_in_row(long row) const {
  return last_index_where([&](long i) { return coord(i).row >= row; });
}

long BoundaryEmbedding::first_in_row(long row) const { return last_in_row(row + 1) + 1; }

long BoundaryEmbedding::first_in_col(long col) const {
  return last_index_where([&](long i) { return coord(i).col < col; }) + 1;
}

long BoundaryEmbedding::last_in_col(long col) const { return first_in_col(col + 1) - 1; }

BoundaryEmbedding::Side BoundaryEmbedding::side(Point p) const {
  if (p.col > coord(last_in_row(p.row)).col) return Side::Below;
  if (p.col >= coord(first_in_row(p.row)).col) return Side::On;
  return Side::Above;
}

std::optional<long> BoundaryEmbedding::vertex_at(Point p) const {
  if (side(p) != Side::On) return std::nullopt;
  long first = first_in_row(p.row);
  return first + (p.col - coord(first).col);
}

FiniteWord BoundaryEmbedding::slice(long i0, long i1) const {
  if (i1 < i0) throw Error("empty boundary slice");
  FiniteWord w;
  for (long i = i0; i <= i1; ++i) {
    w.values.push_back(word_.value(i));
    if (i < i1) w.letters.push_back(word_.letter(i));
  }
  return w;
}

FiniteWord BoundaryEmbedding::word_at_point(Point p) const {
  if (side(p) != Side::Below) throw Error("point is not strictly below the boundary");
  return slice(last_in_row(p.row), first_in_col(p.col));
}

FiniteWord BoundaryEmbedding::word_for_columns(long c_first, long c_last) const {
  if (c_last < c_first) throw Error("empty column range");
  return slice(first_in_col(c_first) - 1, last_in_col(c_last) + 1);
}

CutReading generator_from_a_tilde(const Quiver& q, Vertex cut, bool clockwise) {
  const auto& vs = q.vertices();
  const long m = long(vs.size());
  auto bad = [] { throw Error("quiver is not an oriented cycle of type affine A"); };
  if (m < 2 || q.num_arrows() != std::size_t(m)) bad();
  for (long i = 0; i < m; ++i) {
    Vertex a = vs[i], b = vs[(i + 1) % m];
    int between = q.arrow_count(a, b) + q.arrow_count(b, a);
    if (between != (m == 2 ? 2 : 1)) bad();
  }
  auto it = std::find(vs.begin(), vs.end(), cut);
  if (it == vs.end()) throw Error("cut vertex is not in the quiver");
  long pos = it - vs.begin();
  CutReading r;
  for (long k = 0; k <= m; ++k) r.vertices.push_back(vs[floor_mod(pos + (clockwise ? k : -k), m)]);
  for (long k = 0; k < m; ++k)
    r.letters.push_back(q.arrow_count(r.vertices[k], r.vertices[k + 1]) ? Letter::X : Letter::Y);
  return r;
}

}  // namespace frieze_lab
