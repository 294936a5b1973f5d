#include "qosp/graded_matrix.hpp"

#include <algorithm>

#include "qosp/errors.hpp"
#include "qosp/parallel.hpp"

namespace qosp {

namespace {

auto find_col(const GradedMatrix::Row& row, int c) {
  return std::lower_bound(row.begin(), row.end(), c,
                          [](const GradedMatrix::Entry& e, int x) { return e.first < x; });
}

auto find_col(GradedMatrix::Row& row, int c) {
  return std::lower_bound(row.begin(), row.end(), c,
                          [](const GradedMatrix::Entry& e, int x) { return e.first < x; });
}

GradedMatrix::Row merge_rows(const GradedMatrix::Row& a, const GradedMatrix::Row& b, bool negate) {
  GradedMatrix::Row out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, negate ? -b[j].second : b[j].second);
      ++j;
    } else {
      LaurentPoly v = negate ? a[i].second - b[j].second : a[i].second + b[j].second;
      if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

void check_same_space(const GradedMatrix& a, const GradedMatrix& b) {
  if (a.grading() != b.grading())
    throw DimensionMismatch("matrices act on different graded spaces (" +
                            std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
}

GradedMatrix::GradedMatrix(std::vector<int> grading)
    : grading_(std::move(grading)), rows_(grading_.size()) {}

GradedMatrix GradedMatrix::identity(const std::vector<int>& grading) {
  GradedMatrix m(grading);
  for (int i = 0; i < m.dim(); ++i) m.rows_[static_cast<size_t>(i)].emplace_back(i, LaurentPoly(1));
  return m;
}

GradedMatrix GradedMatrix::diagonal(const std::vector<int>& grading,
                                    const std::vector<LaurentPoly>& d) {
  if (d.size() != grading.size()) throw DimensionMismatch("diagonal length differs from dimension");
  GradedMatrix m(grading);
  for (int i = 0; i < m.dim(); ++i) m.set(i, i, d[static_cast<size_t>(i)]);
  return m;
}

GradedMatrix GradedMatrix::unit(const std::vector<int>& grading, int r, int c,
                                const LaurentPoly& v) {
  GradedMatrix m(grading);
  m.set(r, c, v);
  return m;
}

LaurentPoly GradedMatrix::get(int r, int c) const {
  const Row& row = rows_[static_cast<size_t>(r)];
  auto it = find_col(row, c);
  if (it != row.end() && it->first == c) return it->second;
  return {};
}

void GradedMatrix::set(int r, int c, const LaurentPoly& v) {
  if (r < 0 || c < 0 || r >= dim() || c >= dim()) throw DimensionMismatch("entry out of range");
  Row& row = rows_[static_cast<size_t>(r)];
  auto it = find_col(row, c);
  bool present = it != row.end() && it->first == c;
  if (v.is_zero()) {
    if (present) row.erase(it);
  } else if (present) {
    it->second = v;
  } else {
    row.insert(it, Entry(c, v));
  }
}

void GradedMatrix::add(int r, int c, const LaurentPoly& v) {
  if (v.is_zero()) return;
  set(r, c, get(r, c) + v);
}

size_t GradedMatrix::nnz() const {
  size_t total = 0;
  for (const auto& r : rows_) total += r.size();
  return total;
}

bool GradedMatrix::is_zero() const { return nnz() == 0; }

std::optional<int> GradedMatrix::parity() const {
  std::optional<int> p;
  for (int r = 0; r < dim(); ++r)
    for (const auto& [c, v] : rows_[static_cast<size_t>(r)]) {
      int e = (grading_[static_cast<size_t>(r)] + grading_[static_cast<size_t>(c)]) % 2;
      if (p && *p != e) return std::nullopt;
      p = e;
    }
  return p.value_or(0);
}

int GradedMatrix::homogeneous_parity() const {
  auto p = parity();
  if (!p) throw NotHomogeneous("matrix mixes even and odd entries");
  return *p;
}

GradedMatrix& GradedMatrix::operator+=(const GradedMatrix& o) {
  check_same_space(*this, o);
  for (size_t r = 0; r < rows_.size(); ++r)
    if (!o.rows_[r].empty()) rows_[r] = merge_rows(rows_[r], o.rows_[r], false);
  return *this;
}

GradedMatrix& GradedMatrix::operator-=(const GradedMatrix& o) {
  check_same_space(*this, o);
  for (size_t r = 0; r < rows_.size(); ++r)
    if (!o.rows_[r].empty()) rows_[r] = merge_rows(rows_[r], o.rows_[r], true);
  return *this;
}

GradedMatrix operator*(const GradedMatrix& a, const GradedMatrix& b) {
  check_same_space(a, b);
  GradedMatrix out(a.grading_);
  const auto n = static_cast<size_t>(a.dim());
  parallel_for(n, [&](size_t r) {
    std::vector<LaurentPoly> acc(n);
    std::vector<int> touched;
    for (const auto& [k, av] : a.rows_[r]) {
      for (const auto& [c, bv] : b.rows_[static_cast<size_t>(k)]) {
        auto& slot = acc[static_cast<size_t>(c)];
        if (slot.is_zero()) touched.push_back(c);
        slot.add_product(av, bv);
      }
    }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    GradedMatrix::Row& row = out.rows_[r];
    for (int c : touched) {
      auto& slot = acc[static_cast<size_t>(c)];
      if (!slot.is_zero()) row.emplace_back(c, std::move(slot));
    }
  });
  return out;
}

GradedMatrix GradedMatrix::operator-() const {
  GradedMatrix m = *this;
  for (auto& row : m.rows_)
    for (auto& e : row) e.second = -e.second;
  return m;
}

GradedMatrix GradedMatrix::scaled(const LaurentPoly& c) const {
  if (c.is_zero()) return GradedMatrix(grading_);
  GradedMatrix m = *this;
  for (auto& row : m.rows_)
    for (auto& e : row) e.second = e.second * c;
  return m;
}

bool operator==(const GradedMatrix& a, const GradedMatrix& b) {
  return a.grading_ == b.grading_ && a.rows_ == b.rows_;
}

GradedMatrix GradedMatrix::transform(
    const std::function<LaurentPoly(int, int, const LaurentPoly&)>& f) const {
  GradedMatrix m(grading_);
  for (int r = 0; r < dim(); ++r)
    for (const auto& [c, v] : rows_[static_cast<size_t>(r)]) {
      LaurentPoly w = f(r, c, v);
      if (!w.is_zero()) m.rows_[static_cast<size_t>(r)].emplace_back(c, std::move(w));
    }
  return m;
}

std::optional<std::pair<int, int>> first_difference(const GradedMatrix& a, const GradedMatrix& b) {
  check_same_space(a, b);
  for (int r = 0; r < a.dim(); ++r) {
    const auto& ra = a.rows_[static_cast<size_t>(r)];
    const auto& rb = b.rows_[static_cast<size_t>(r)];
    if (ra == rb) continue;
    size_t i = 0;
    while (i < ra.size() && i < rb.size() && ra[i] == rb[i]) ++i;
    int c;
    if (i == ra.size())
      c = rb[i].first;
    else if (i == rb.size())
      c = ra[i].first;
    else
      c = std::min(ra[i].first, rb[i].first);
    return std::make_pair(r, c);
  }
  return std::nullopt;
}

}  // namespace qosp
