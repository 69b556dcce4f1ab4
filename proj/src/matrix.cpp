#include "parind/matrix.hpp"

#include <sstream>

namespace parind {

RationalMatrix make_matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r ? static_cast<int>(rows.begin()->size()) : 0;
  RationalMatrix m(r, c);
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c) throw DomainError("make_matrix: ragged rows");
    int j = 0;
    for (const auto& x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

RationalMatrix diagonal(const std::vector<Rational>& entries) {
  const int n = static_cast<int>(entries.size());
  RationalMatrix m = zeros<Rational>(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = entries[i];
  return m;
}

RationalMatrix elementary(int n, int i, int j, const Rational& c) {
  RationalMatrix m = identity<Rational>(n);
  m(i, j) += c;
  return m;
}

std::vector<std::vector<std::string>> to_strings(const RationalMatrix& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out[i].push_back(m(i, j).str());
  return out;
}

RationalMatrix from_strings(const std::vector<std::vector<std::string>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r ? static_cast<int>(rows[0].size()) : 0;
  RationalMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw DomainError("from_strings: ragged rows");
    for (int j = 0; j < c; ++j) m(i, j) = Rational::parse(rows[i][j]);
  }
  return m;
}

std::string to_string(const RationalMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < m.rows(); ++i) {
    if (i) os << ';';
    for (int j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j).str();
  }
  os << ']';
  return os.str();
}

RootPQ parse_root_p(const std::string& text) {
  const std::string root = "√";
  const auto pos = text.find(root);
  if (pos == std::string::npos) return RootPQ(Rational::parse(text));
  const long p = std::stol(text.substr(pos + root.size()));
  const std::string head = text.substr(0, pos);
  // split "a+b" / "a-b" at the last sign that is not the leading one
  std::size_t split = std::string::npos;
  for (std::size_t i = head.size(); i-- > 1;) {
    if ((head[i] == '+' || head[i] == '-') && head[i - 1] != '/') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos) throw std::invalid_argument("bad RootP literal '" + text + "'");
  return RootPQ(Rational::parse(head.substr(0, split)), Rational::parse(head.substr(split)), p);
}

}  // namespace parind
