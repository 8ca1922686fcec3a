#pragma once

#include <string>
#include <utility>
#include <vector>

#include "adele/elliptic.hpp"
#include "adele/milnor.hpp"
#include "adele/signs.hpp"

namespace adele {

/// Closed point of the elliptic model carrying a rational point.
Place place_of(const CurvePtr& c, const EcPoint& P);

/// constant * prod factor^e, kept unexpanded, with its divisor.
struct MillerFunction {
    CurvePtr curve;
    FieldElement constant;
    std::vector<std::pair<FunctionFieldElement, int>> factors;
    Divisor divisor;

    static MillerFunction unit(const CurvePtr& c);
    /// Wraps a single function; the divisor is computed.
    static MillerFunction of(const FunctionFieldElement& h);
    /// Throws unless the product of the factors has the declared divisor.
    void check() const;
    FunctionFieldElement expanded() const;
    MillerFunction scaled(const FieldElement& c) const;
    MillerFunction pow(int e) const;
    MillerFunction& operator*=(const MillerFunction& o);
};

inline MillerFunction operator*(MillerFunction a, const MillerFunction& b) { return a *= b; }

/// Value in k(v) of f at a place outside its divisor, from the factors.
FieldElement value_at(const MillerFunction& f, const Place& v);
/// f(D) = prod norm(f(v))^D(v).
FieldElement evaluate_at(const MillerFunction& f, const Divisor& D);

/// The line through A and B (tangent when A = B), normalized at O.
FunctionFieldElement chord(const CurvePtr& c, const EcPoint& A, const EcPoint& B);
/// x - x(A), or 1 for A = O.
FunctionFieldElement vertical(const CurvePtr& c, const EcPoint& A);

/// Function with divisor l (P + R) - l (R).
MillerFunction miller_function(const CurvePtr& c, const EcPoint& P, int l, const EcPoint& R = EcPoint::zero());

struct PairingValue {
    FieldElement value;
    int order = 1;  // multiplicative order, divides l
};

/// (-1)^l f_P(Q) / f_Q(P) with normalized Miller functions.
PairingValue weil_pairing_miller(const CurvePtr& c, const EcPoint& P, const EcPoint& Q, int l);

/// Translation offsets R1, R2 making (P + R1) - (R1) and (Q + R2) - (R2) disjoint.
struct Representatives {
    EcPoint R1, R2;
    Divisor D, E;
};
/// The `skip`-th admissible pair in a fixed order of offsets.
Representatives choose_representatives(const CurvePtr& c, const EcPoint& P, const EcPoint& Q, int skip = 0);

/// f(E) / g(D) with div f = l D, div g = l E.
PairingValue weil_pairing_idelic(const CurvePtr& c, const EcPoint& P, const EcPoint& Q, int l, int skip = 0);

/// An l-torsion class with a chain: div chain = l * representative.
struct MasseyClass {
    Divisor representative;
    MillerFunction chain;
};

struct MasseyOutput {
    PlaceUnits cocycle;
    FieldElement direct_image;
};

MasseyOutput massey_triple_curve(const MasseyClass& alpha, const MasseyClass& beta, int l,
                                 const SignConventions& signs = kSignConventions);
/// Massey product of the classes (P) - (O) and (Q) - (O) with translated representatives.
MasseyOutput massey_for_points(const CurvePtr& c, const EcPoint& P, const EcPoint& Q, int l, int skip = 0,
                               const SignConventions& signs = kSignConventions);

struct SignAuditReport {
    SignConventions configured;
    std::vector<std::pair<std::string, bool>> fixtures;  // results under the configured signs
    std::vector<SignConventions> consistent;             // every assignment passing all fixtures
    bool ok() const;
};

SignAuditReport sign_audit(const SignConventions& configured = kSignConventions);

}  // namespace adele
