#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "emt/rational.hpp"

namespace emt {

using SortId = std::uint32_t;
using GenIdx = std::uint32_t;

enum class Theory { Atomic, Linear, Multiset, Poly, Offset, Primitive };

const char* theory_name(Theory t);

// ---------------------------------------------------------------------------
// Per-theory value payloads. Each is a structurally canonical container: the
// stored form of two equal payloads is identical, so operator== is semantic
// equality of the raw (unquotiented) domain and operator< is a total order
// usable for table keys. Quotienting by the asserted equations is the
// solvers' job, not the payloads'.
// ---------------------------------------------------------------------------

// Atomic theory: an opaque generator e_i.
struct AtomVal {
    GenIdx idx = 0;

    friend bool operator==(const AtomVal& a, const AtomVal& b) { return a.idx == b.idx; }
    friend bool operator<(const AtomVal& a, const AtomVal& b) { return a.idx < b.idx; }
};

// Linear/affine theory: sum_i coeff_i * e_i + constant, coefficients exact
// rationals, no zero coefficients stored.
struct LinExpr {
    std::map<GenIdx, Rat> coeffs;
    Rat constant = 0;

    bool is_zero() const { return coeffs.empty() && constant == 0; }
    bool is_constant() const { return coeffs.empty(); }

    friend bool operator==(const LinExpr& a, const LinExpr& b) {
        return a.coeffs == b.coeffs && a.constant == b.constant;
    }
    friend bool operator<(const LinExpr& a, const LinExpr& b) {
        if (a.coeffs != b.coeffs) return a.coeffs < b.coeffs;
        return a.constant < b.constant;
    }
};

LinExpr lin_gen(GenIdx g);
LinExpr lin_const(const Rat& k);
LinExpr lin_add(const LinExpr& a, const LinExpr& b);
LinExpr lin_scale(const Rat& k, const LinExpr& a);
LinExpr lin_sub(const LinExpr& a, const LinExpr& b);

// Multiset theory: finitely supported multiset of generators, positive
// multiplicities only. The empty multiset is the AC identity.
struct MSet {
    std::map<GenIdx, std::uint64_t> counts;

    bool empty() const { return counts.empty(); }

    friend bool operator==(const MSet& a, const MSet& b) { return a.counts == b.counts; }
    friend bool operator<(const MSet& a, const MSet& b) { return a.counts < b.counts; }
};

MSet ms_gen(GenIdx g);
MSet ms_union(const MSet& a, const MSet& b);
// Requires b <= a pointwise.
MSet ms_minus(const MSet& a, const MSet& b);
MSet ms_intersect(const MSet& a, const MSet& b);
bool ms_subset(const MSet& a, const MSet& b); // a <= b pointwise
std::uint64_t ms_degree(const MSet& m);

// Polynomial theory over Q. Monomials map generator -> positive exponent;
// the empty monomial is 1. Poly maps monomial -> nonzero coefficient; the
// empty map is the zero polynomial. Keys use the structural map order, which
// is independent of the solver's monomial order.
struct Monomial {
    std::map<GenIdx, std::uint32_t> exps;

    bool is_one() const { return exps.empty(); }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps == b.exps; }
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.exps < b.exps; }
};

struct Poly {
    std::map<Monomial, Rat> terms;

    bool is_zero() const { return terms.empty(); }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms == b.terms; }
    friend bool operator<(const Poly& a, const Poly& b) { return a.terms < b.terms; }
};

std::uint64_t mono_degree(const Monomial& m);
Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b); // a | b
Monomial mono_div(const Monomial& b, const Monomial& a); // b / a, requires a | b
Monomial mono_lcm(const Monomial& a, const Monomial& b);

Poly poly_gen(GenIdx g);
Poly poly_const(const Rat& k);
Poly poly_term(const Monomial& m, const Rat& c);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_scale(const Rat& k, const Poly& a);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_mul_term(const Poly& a, const Monomial& m, const Rat& c);

// Offset theory: generator plus an integer shift, gen + shift.
struct OffsetVal {
    GenIdx gen = 0;
    long long shift = 0;

    friend bool operator==(const OffsetVal& a, const OffsetVal& b) {
        return a.gen == b.gen && a.shift == b.shift;
    }
    friend bool operator<(const OffsetVal& a, const OffsetVal& b) {
        if (a.gen != b.gen) return a.gen < b.gen;
        return a.shift < b.shift;
    }
};

// Primitive theory: generators merged with integer/string literals and
// constructor terms.
struct PrimValue;

struct PrimGen { GenIdx idx = 0; };
struct PrimInt { long long v = 0; };
struct PrimStr { std::string s; };
struct PrimCtor {
    std::string sym;
    std::vector<PrimValue> args;
};

struct PrimValue {
    std::variant<PrimGen, PrimInt, PrimStr, PrimCtor> node;
};

bool operator==(const PrimValue& a, const PrimValue& b);
inline bool operator!=(const PrimValue& a, const PrimValue& b) { return !(a == b); }
bool operator<(const PrimValue& a, const PrimValue& b);

PrimValue prim_gen(GenIdx g);
PrimValue prim_int(long long v);
PrimValue prim_str(std::string s);
PrimValue prim_ctor(std::string sym, std::vector<PrimValue> args);
// True iff `needle` occurs in `hay` (at the root or at any depth).
bool prim_contains(const PrimValue& hay, const PrimValue& needle);

// ---------------------------------------------------------------------------
// Value: a sort-tagged semantic e-id.
// ---------------------------------------------------------------------------

using Payload = std::variant<AtomVal, LinExpr, MSet, Poly, OffsetVal, PrimValue>;

struct Value {
    SortId sort = 0;
    Payload payload;

    friend bool operator==(const Value& a, const Value& b) {
        return a.sort == b.sort && a.payload == b.payload;
    }
    friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }
    friend bool operator<(const Value& a, const Value& b) {
        if (a.sort != b.sort) return a.sort < b.sort;
        return a.payload < b.payload;
    }
};

// Debug rendering ("e3", "4*e0 + 5*e3 + 1", "{e0, e0, e1}", "e0^2*e1 - 2",
// "e1+9", "cons(e0, nil)"). Not the CLI term syntax.
std::string to_string(const Value& v);
std::string to_string(const LinExpr& e);
std::string to_string(const MSet& m);
std::string to_string(const Monomial& m);
std::string to_string(const Poly& p);
std::string to_string(const PrimValue& v);

} // namespace emt
