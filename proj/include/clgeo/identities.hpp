#pragma once

#include <optional>
#include <string>
#include <utility>

#include "clgeo/clset.hpp"

namespace clgeo {

/// One evaluated counting identity; pass iff both sides agree exactly.
struct IdentityReport {
    std::string name;
    Rational lhs;
    Rational rhs;
    bool pass;
};

// Point/subspace counting identity (PG): for p in tau with dim(tau) = i,
//   |[p]_k ∩ L| + gauss(n-1,k)(q^k-1) / (gauss(i-1,k)(q^i-1)) |[tau]_k ∩ L|
//     = gauss(n-1,k)/gauss(i-1,k) |[p,tau]_k ∩ L| + (q^k-1)/(q^n-1) |L|.
IdentityReport check_lemma212(const KSet& L, const Subspace& p, const Subspace& tau);

// Parameter recovered from the restriction parameters of all t-spaces
// through the k-space K (PG, 2k+1 <= t <= n-1):
//   x = chi(K) + (sum x_pi - gauss(n-k,t-k) chi(K)) / gauss(n-k-1,t-k-1).
Rational lemma41_parameter(const KSet& L, int K, int t);

// Affine line-class analogue (AG, k=1, n >= 4, 3 <= t <= n-1):
//   x = (q^{t-2}-1)/(q^{n-2}-1) (sum x_pi)/gauss(n-3,t-3)
//       - (q^{n-1}-1)/(q^{t-1}-1) chi(l) + chi(l).
Rational lemma42_parameter(const KSet& L, int ell, int t);

/**
 * Admissible parameter structure: a non-empty CL k-set parameter is
 * x = 1 + C/denominator for C in N, within [0, (q^{n+1}-1)/(q^{k+1}-1)];
 * x = 0 is the empty set.
 */
struct AdmissibleParameters {
    BigInt denominator;  // gauss(n-k-1, t-k-1, q)
    Rational max;        // (q^{n+1}-1)/(q^{k+1}-1)
    bool admits(const Rational& x) const;
};

// Requires (k+1) | (t+1) and 2k+1 <= t <= n-1.
AdmissibleParameters thm51_admissible(int n, int k, int q, int t);

// Number of possible parameters in PG(n,q), n >= 2k+2:
//   q^{k+1} (q^{n-k}-1)/(q^{k+1}-1) gauss(n-k-1,k,q) + 2.
BigInt cor52_count(int n, int k, int q);

/**
 * Gluing verdict: if every t-space restriction of M is CL and the glue
 * expression is the same constant C at every k-space (resp. line), then M is
 * CL of parameter C; otherwise a witness explains the failure.
 */
struct GlueReport {
    bool restrictions_cl;                       // precondition verdict
    std::optional<int> bad_restriction;         // t-space id failing def1
    bool constant;                              // glue expression constant?
    Rational value;                             // the constant, when constant
    std::optional<std::pair<int, int>> witness; // (K, K') with differing values
    bool infinity_ok = true;                    // AG: every direction carries C lines
    bool verdict = false;                       // final: M is CL of parameter `value`
};

// PG, 2k+1 <= t <= n-1 (so n >= 2k+2).
GlueReport glue_constant_pg(const KSet& M, int t);
// AG lines, 3 <= t <= n-1 (so n >= 4).
GlueReport glue_constant_ag(const KSet& M, int t);

/// An exact non-existence bound with its hypothesis gate.
struct BoundReport {
    std::string name;
    int n, k, q;
    bool applicable;
    std::string hypothesis;
    Rational value;  // meaningful iff applicable
};

// x >= (q^{n-k}-1)/(q^{2k+2}-1) + 1 for non-trivial PG sets; needs n >= 3k+3.
BoundReport bound_thm62(int n, int k, int q);
// x >= 2(q^{n-k}-1)/(q^{k+1}-1) + 1 for non-trivial AG sets; needs n >= 2k+2.
BoundReport bound_thm64(int n, int k, int q);
// AG line classes, n >= 4: x in {0,1} or x >= 2(q^{n-1}-1)/(q^2-1) + 1.
BoundReport bound_thm72(int n, int q);

/// Real-valued exclusion threshold (irrational exponents).
struct RealBoundReport {
    std::string name;
    int n, k, q;
    bool applicable;
    long double value;
};

// Excludes 2 <= x <= 2^{-1/8} q^{n/2-k^2/4-3k/4-3/2} (q-1)^{k^2/4-k/4+1/2}
// sqrt(q^2+q+1); needs n >= 3k+2 and q >= 3.
RealBoundReport bound_thm66(int n, int k, int q);

/// Largest x excluded by the 16x <= min{...} condition (0 when none).
struct ScanBoundReport {
    int n, k, q;
    bool applicable;
    BigInt max_x;
};

// Needs n >= 2k+1; scans x = 1, 2, ... with the exact cubed comparison
// (16x)^3 <= min(q^{n-k-l+2}, q^{n-2k-r}).
ScanBoundReport bound_thm67_maxx(int n, int k, int q);

}  // namespace clgeo
