#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "skylr/shapes.hpp"

namespace skylr {

using Coeff = boost::multiprecision::cpp_int;
using Exponent = std::vector<int>;

struct ExponentHash {
    std::size_t operator()(const Exponent& e) const noexcept;
};

/// Sparse polynomial in x_1..x_n with integer coefficients. Zero
/// coefficients are never stored.
class Polynomial {
public:
    using Terms = std::unordered_map<Exponent, Coeff, ExponentHash>;

    Polynomial() = default;
    explicit Polynomial(std::size_t n) : n_(n) {}

    static Polynomial constant(std::size_t n, const Coeff& c);
    static Polynomial monomial(Exponent e, const Coeff& c = 1);
    /// x_i, 1-based.
    static Polynomial variable(std::size_t n, std::size_t i);

    std::size_t n() const noexcept { return n_; }
    const Terms& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    Coeff coeff(const Exponent& e) const;

    /// Adds c x^e; throws VariableCountMismatch on a wrong-length exponent.
    void add_term(const Exponent& e, const Coeff& c);

    /// Terms in lexicographic order of exponents.
    std::vector<std::pair<Exponent, Coeff>> sorted_terms(bool descending = false) const;
    /// Degree -> homogeneous component.
    std::map<int, Polynomial> homogeneous_components() const;
    bool is_homogeneous() const;

    Polynomial& operator+=(const Polynomial& q);
    Polynomial& operator-=(const Polynomial& q);
    friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
    friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
    friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator*(Polynomial p, const Coeff& c);
    friend bool operator==(const Polynomial& p, const Polynomial& q);

private:
    void check_same_n(const Polynomial& q) const;

    std::size_t n_ = 0;
    Terms terms_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial sub(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);
bool equals(const Polynomial& p, const Polynomial& q);

/// "3*x1^2*x3 - x2 + 1", terms in decreasing lexicographic order; "0" if empty.
std::string to_string(const Polynomial& p);

/// Sum over contretableaux of shape lam with entries in [n], read through j -> n-j+1.
Polynomial schur_poly(const Partition& lam, std::size_t n);
/// Generating function of SSK of shape g on the identity basement.
Polynomial atom_poly(const WeakComposition& g, std::size_t n);
/// Generating function of SSK of shape reverse(g) on the reversed basement.
Polynomial char_poly(const WeakComposition& g, std::size_t n);
/// Sum of atoms over the zero paddings of a to length n.
Polynomial qs_poly(const Composition& a, std::size_t n);
/// Same function read off composition tableaux: rows are placed on a
/// strictly increasing first column c_1 < ... < c_l, which then acts as the
/// basement of the remaining cells and contributes x_{c_r} per row.
Polynomial qs_poly_ssc(const Composition& a, std::size_t n);

/// c with p = sum_k c_k basis_k. Exact rational solve; rows touching a single
/// unknown are eliminated first and any remainder is reduced densely.
/// Throws NotInSpan or NonIntegralCoefficient.
std::vector<Coeff> solve_in_basis(const Polynomial& p, const std::vector<const Polynomial*>& basis);

std::map<WeakComposition, Coeff> expand_in_atoms(const Polynomial& p);
std::map<WeakComposition, Coeff> expand_in_chars(const Polynomial& p);
std::map<Composition, Coeff> expand_in_qs(const Polynomial& p);

/// Memoised generating functions, shared across threads.
enum class GenKind { Schur, Atom, Character, QuasiSchur };
const Polynomial& cached(GenKind kind, const std::vector<int>& shape, std::size_t n);

}  // namespace skylr
