#include "wittzeta/sparse_poly.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "wittzeta/errors.hpp"

namespace wittzeta {

SparsePolynomial SparsePolynomial::constant(std::size_t num_vars, const Integer& c) {
  SparsePolynomial f(num_vars);
  f.add_term(Exponents(num_vars, 0), c);
  return f;
}

SparsePolynomial SparsePolynomial::variable(std::size_t num_vars, std::size_t index) {
  SparsePolynomial f(num_vars);
  Exponents e(num_vars, 0);
  e.at(index) = 1;
  f.add_term(e, 1);
  return f;
}

void SparsePolynomial::add_term(const Exponents& e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SparsePolynomial operator+(const SparsePolynomial& a, const SparsePolynomial& b) {
  SparsePolynomial out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

SparsePolynomial operator-(const SparsePolynomial& a) {
  SparsePolynomial out(a.num_vars_);
  for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
  return out;
}

SparsePolynomial operator-(const SparsePolynomial& a, const SparsePolynomial& b) { return a + (-b); }

SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
  SparsePolynomial out(a.num_vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      SparsePolynomial::Exponents e(a.num_vars_);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

SparsePolynomial SparsePolynomial::pow(unsigned exponent) const {
  SparsePolynomial result = constant(num_vars_, 1);
  SparsePolynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

FiniteField::Element SparsePolynomial::evaluate(const FiniteField& field,
                                                std::span<const FiniteField::Element> point) const {
  FiniteField::Element acc = field.zero();
  const Integer p(static_cast<unsigned long>(field.characteristic()));
  for (const auto& [e, c] : terms_) {
    Integer r = c % p;
    if (r < 0) r += p;
    if (r == 0) continue;
    FiniteField::Element term = field.from_int(r.get_si());
    for (std::size_t i = 0; i < num_vars_; ++i) {
      if (e[i] == 0) continue;
      term = field.mul(term, field.pow(point[i], Integer(e[i])));
    }
    acc = field.add(acc, term);
  }
  return acc;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars) : text_(text), vars_(vars) {}

  SparsePolynomial parse() {
    SparsePolynomial f = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("polynomial '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + msg);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  SparsePolynomial expr() {
    SparsePolynomial f = term();
    for (;;) {
      if (accept('+')) {
        f = f + term();
      } else if (accept('-')) {
        f = f - term();
      } else {
        return f;
      }
    }
  }

  SparsePolynomial term() {
    SparsePolynomial f = unary();
    while (accept('*')) f = f * unary();
    return f;
  }

  SparsePolynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  SparsePolynomial power() {
    SparsePolynomial base = atom();
    if (accept('^')) {
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent must be a nonnegative integer literal");
      const Integer e = parse_integer(text_.substr(start, pos_ - start));
      if (e > 1000) fail("exponent too large");
      return base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  SparsePolynomial atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      SparsePolynomial f = expr();
      if (!accept(')')) fail("expected ')'");
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return SparsePolynomial::constant(vars_.size(), parse_integer(text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name(text_.substr(start, pos_ - start));
      const auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) fail("unknown variable '" + name + "'");
      return SparsePolynomial::variable(vars_.size(), static_cast<std::size_t>(it - vars_.begin()));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

// Calls visit(indices, elements) for every common zero.
void for_each_zero(std::span<const SparsePolynomial> polys, std::size_t num_vars, const FiniteField& field,
                   std::uint64_t budget,
                   const std::function<void(const std::vector<std::uint64_t>&)>& visit) {
  for (const SparsePolynomial& f : polys) {
    if (f.num_vars() != num_vars) throw InputError("polynomial variable count mismatch");
  }
  check_enumeration_budget(field, num_vars, budget, "affine point enumeration");
  const std::uint64_t q = field.size();
  std::vector<FiniteField::Element> elements;
  elements.reserve(q);
  for (std::uint64_t i = 0; i < q; ++i) elements.push_back(field.element(i));

  std::vector<std::uint64_t> idx(num_vars, 0);
  std::vector<FiniteField::Element> point(num_vars, elements[0]);
  for (;;) {
    bool zero = true;
    for (const SparsePolynomial& f : polys) {
      if (!field.is_zero(f.evaluate(field, point))) {
        zero = false;
        break;
      }
    }
    if (zero) visit(idx);
    std::size_t pos = 0;
    while (pos < num_vars) {
      if (++idx[pos] < q) {
        point[pos] = elements[idx[pos]];
        break;
      }
      idx[pos] = 0;
      point[pos] = elements[0];
      ++pos;
    }
    if (pos == num_vars) return;
  }
}

}  // namespace

SparsePolynomial parse_polynomial(std::string_view text, const std::vector<std::string>& vars) {
  return Parser(text, vars).parse();
}

std::uint64_t check_enumeration_budget(const FiniteField& field, std::size_t num_vars, std::uint64_t budget,
                                       std::string_view what) {
  const Integer required = ipow(Integer(static_cast<unsigned long>(field.size())), num_vars);
  if (required > Integer(static_cast<unsigned long>(budget))) {
    throw BudgetError(std::string(what), to_string(required), budget);
  }
  return to_u64(required, "enumeration size");
}

Integer count_affine_points(std::span<const SparsePolynomial> polys, std::size_t num_vars,
                            const FiniteField& field, std::uint64_t budget) {
  if (num_vars == 0) throw InputError("count_affine_points: need at least one variable");
  std::uint64_t count = 0;
  for_each_zero(polys, num_vars, field, budget, [&](const std::vector<std::uint64_t>&) { ++count; });
  return Integer(static_cast<unsigned long>(count));
}

std::vector<std::vector<std::uint64_t>> affine_points(std::span<const SparsePolynomial> polys,
                                                      std::size_t num_vars, const FiniteField& field,
                                                      std::uint64_t budget) {
  if (num_vars == 0) throw InputError("affine_points: need at least one variable");
  std::vector<std::vector<std::uint64_t>> out;
  for_each_zero(polys, num_vars, field, budget, [&](const std::vector<std::uint64_t>& idx) { out.push_back(idx); });
  return out;
}

}  // namespace wittzeta
