#include <eigenkit/lattice.hpp>

#include <stdexcept>

namespace eigenkit {

Lattice::Lattice(RatMatrix basis) : basis_(std::move(basis)) {
  if (!basis_.is_square() || basis_.rows() == 0)
    throw std::invalid_argument("Lattice: basis must be square and nonempty");
  gram_ = basis_ * basis_.transpose();
  try {
    dual_gram_ = inverse(gram_);
  } catch (const std::domain_error&) {
    throw std::invalid_argument("Lattice: basis is singular");
  }
}

Lattice Lattice::standard(unsigned n) { return Lattice(RatMatrix::identity(n)); }

Lattice Lattice::parse(std::string_view text) {
  std::vector<std::vector<BigRational>> rows;
  std::string current;
  std::vector<BigRational> row;
  const auto flush_entry = [&]() {
    if (current.empty()) throw std::invalid_argument("Lattice::parse: empty entry");
    row.push_back(parse_rational(current));
    current.clear();
  };
  for (const char ch : text) {
    if (ch == ' ') continue;
    if (ch == ',') {
      flush_entry();
    } else if (ch == ';') {
      flush_entry();
      rows.push_back(std::move(row));
      row.clear();
    } else {
      current += ch;
    }
  }
  flush_entry();
  rows.push_back(std::move(row));
  const std::size_t n = rows.size();
  RatMatrix basis(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n)
      throw std::invalid_argument("Lattice::parse: expected a square matrix");
    for (std::size_t j = 0; j < n; ++j) basis.at(i, j) = rows[i][j];
  }
  return Lattice(std::move(basis));
}

BigRational Lattice::inner(const std::vector<long>& u, const std::vector<long>& v) const {
  const unsigned n = dim();
  if (u.size() != n || v.size() != n)
    throw std::invalid_argument("Lattice::inner: dimension mismatch");
  BigRational acc(0);
  for (unsigned i = 0; i < n; ++i) {
    if (u[i] == 0) continue;
    BigRational partial(0);
    for (unsigned j = 0; j < n; ++j) {
      if (v[j] == 0) continue;
      partial += gram_.at(i, j) * BigRational(v[j]);
    }
    acc += BigRational(u[i]) * partial;
  }
  return acc;
}

std::string Lattice::str() const {
  std::string out;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    if (i) out += ";";
    for (std::size_t j = 0; j < basis_.cols(); ++j) {
      if (j) out += ",";
      out += basis_.at(i, j).str();
    }
  }
  return out;
}

Lattice dual_lattice(const Lattice& l) {
  return Lattice(inverse(l.basis()).transpose());
}

}  // namespace eigenkit
