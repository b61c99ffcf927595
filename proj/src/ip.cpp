#include "cglab/ip.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "cglab/rng.hpp"

namespace cglab {

IntegerProgram::IntegerProgram(RatVec c, RatMat a, RatVec b,
                               std::optional<IntVec> upper_bounds)
    : c_(std::move(c)), a_(std::move(a)), b_(std::move(b)),
      bounds_(std::move(upper_bounds)) {
  if (a_.cols() != c_.size() || a_.rows() != b_.size()) {
    throw std::invalid_argument("inconsistent instance dimensions");
  }
  if (bounds_) {
    if (bounds_->size() != c_.size()) {
      throw std::invalid_argument("bounds length != variable count");
    }
    for (Index i = 0; i < bounds_->size(); ++i) {
      if ((*bounds_)[i] < 0) {
        throw std::invalid_argument("negative variable upper bound");
      }
    }
  }
}

Rational IntegerProgram::norm_a11() const {
  Rational acc;
  for (Index j = 0; j < a_.cols(); ++j) {
    for (Index i = 0; i < a_.rows(); ++i) acc += abs(a_(i, j));
  }
  return acc;
}

Rational IntegerProgram::norm_b1() const { return l1_norm(b_); }

IntegerProgram make_jeroslow(int n) {
  if (n < 3 || n % 2 == 0) {
    throw std::invalid_argument("jeroslow instance needs odd n >= 3");
  }
  RatVec c = RatVec::Zero(n);
  RatMat a(2, n);
  for (Index j = 0; j < n; ++j) {
    a(0, j) = Rational(2);
    a(1, j) = Rational(-2);
  }
  RatVec b(2);
  b[0] = Rational(n);
  b[1] = Rational(-n);
  IntVec bounds = IntVec::Ones(n);
  return IntegerProgram(std::move(c), std::move(a), std::move(b),
                        std::move(bounds));
}

IntegerProgram random_packing_ip(std::uint64_t seed, int n, int m,
                                 int coeff_max) {
  if (n < 1 || m < 1 || coeff_max < 1) {
    throw std::invalid_argument("packing generator needs n, m, coeff_max >= 1");
  }
  Rng rng(seed);
  RatMat a(m, n);
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < n; ++j) {
      a(i, j) = Rational(rng.range(0, coeff_max));
    }
  }
  RatVec b(m);
  const std::int64_t bmax = static_cast<std::int64_t>(n) * coeff_max;
  for (Index i = 0; i < m; ++i) b[i] = Rational(rng.range(1, bmax));
  RatVec c(n);
  for (Index j = 0; j < n; ++j) c[j] = Rational(rng.range(1, coeff_max));
  IntVec bounds = IntVec::Constant(n, bmax);
  return IntegerProgram(std::move(c), std::move(a), std::move(b),
                        std::move(bounds));
}

IntegerPointSet enumerate_integer_points(const IntegerProgram& ip,
                                         const IntVec& box,
                                         std::uint64_t budget) {
  const Index n = ip.num_vars();
  if (box.size() != n) throw std::invalid_argument("box length != n");

  IntVec lim = box;
  if (ip.upper_bounds()) {
    for (Index i = 0; i < n; ++i) lim[i] = std::min(lim[i], (*ip.upper_bounds())[i]);
  }
  std::uint64_t cells = 1;
  for (Index i = 0; i < n; ++i) {
    if (lim[i] < 0) throw std::invalid_argument("negative box bound");
    const std::uint64_t w = static_cast<std::uint64_t>(lim[i]) + 1;
    if (cells > budget / w) {
      throw BudgetError("enumeration box exceeds budget of " +
                        std::to_string(budget) + " points");
    }
    cells *= w;
  }

  IntegerPointSet out;
  const Index m = ip.num_constraints();
  IntVec x = IntVec::Zero(n);
  // Odometer over [0, lim]; rows checked exactly.
  while (true) {
    bool feasible = true;
    for (Index i = 0; i < m && feasible; ++i) {
      Rational lhs;
      for (Index j = 0; j < n; ++j) lhs.addmul(ip.matrix()(i, j), Rational(x[j]));
      feasible = lhs <= ip.rhs()[i];
    }
    if (feasible) out.points.push_back(x);

    Index d = 0;
    while (d < n && x[d] == lim[d]) {
      x[d] = 0;
      ++d;
    }
    if (d == n) break;
    ++x[d];
  }
  return out;
}

namespace {

// Next non-comment, non-blank line split into tokens.
std::vector<std::string> next_tokens(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    return toks;
  }
  return {};
}

RatVec parse_rationals(const std::vector<std::string>& toks, Index expect,
                       const char* what) {
  if (static_cast<Index>(toks.size()) != expect) {
    throw std::invalid_argument(std::string("instance file: expected ") +
                                std::to_string(expect) + " entries for " + what);
  }
  RatVec v(expect);
  for (Index i = 0; i < expect; ++i) v[i] = Rational::parse(toks[i]);
  return v;
}

}  // namespace

IntegerProgram read_instance(std::istream& in) {
  auto header = next_tokens(in);
  if (header.size() != 2) {
    throw std::invalid_argument("instance file: first line must be 'n m'");
  }
  const Index n = std::stol(header[0]);
  const Index m = std::stol(header[1]);
  if (n < 1 || m < 0) throw std::invalid_argument("instance file: bad sizes");

  RatVec c = parse_rationals(next_tokens(in), n, "objective");
  RatMat a(m, n);
  for (Index i = 0; i < m; ++i) {
    RatVec row = parse_rationals(next_tokens(in), n, "matrix row");
    for (Index j = 0; j < n; ++j) a(i, j) = row[j];
  }
  // m = 0 writes a blank rhs line, which the tokenizer already skips.
  RatVec b = m > 0 ? parse_rationals(next_tokens(in), m, "rhs") : RatVec(0);

  std::optional<IntVec> bounds;
  auto tail = next_tokens(in);
  if (!tail.empty()) {
    if (tail[0] != "bounds" || static_cast<Index>(tail.size()) != n + 1) {
      throw std::invalid_argument("instance file: malformed bounds line");
    }
    IntVec u(n);
    for (Index i = 0; i < n; ++i) u[i] = std::stoll(tail[i + 1]);
    bounds = std::move(u);
  }
  return IntegerProgram(std::move(c), std::move(a), std::move(b),
                        std::move(bounds));
}

IntegerProgram read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open instance file: " + path);
  return read_instance(in);
}

void write_instance(std::ostream& out, const IntegerProgram& ip) {
  const Index n = ip.num_vars();
  const Index m = ip.num_constraints();
  out << n << ' ' << m << '\n';
  for (Index j = 0; j < n; ++j) out << (j ? " " : "") << ip.objective()[j].str();
  out << '\n';
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < n; ++j) out << (j ? " " : "") << ip.matrix()(i, j).str();
    out << '\n';
  }
  for (Index i = 0; i < m; ++i) out << (i ? " " : "") << ip.rhs()[i].str();
  out << '\n';
  if (ip.upper_bounds()) {
    out << "bounds";
    for (Index i = 0; i < n; ++i) out << ' ' << (*ip.upper_bounds())[i];
    out << '\n';
  }
}

}  // namespace cglab
