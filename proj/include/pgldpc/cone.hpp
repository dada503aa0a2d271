#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pgldpc/binary_matrix.hpp"
#include "pgldpc/rational.hpp"

namespace pgldpc {

/// One defining inequality of a fundamental cone, in coefficient form:
///   parity(j,i):  sum over supp(row j)\{i} of w  >=  w_i   (i in supp(row j))
///   nonneg(i):    w_i >= 0
struct Inequality {
    enum class Kind { parity, nonneg };
    Kind kind = Kind::nonneg;
    int row = -1;  // parity only
    int index = 0;
};

/// Inequality description of a fundamental cone: one parity inequality per
/// (row, support index) pair in row-major order, then the n nonnegativity
/// inequalities.
class ConeSystem {
public:
    /// Throws std::invalid_argument on an empty matrix.
    static ConeSystem build(BinaryMatrix H);

    const BinaryMatrix& matrix() const { return H_; }
    int n() const { return H_.n; }
    const std::vector<Inequality>& inequalities() const { return ineqs_; }
    int parity_count() const { return parity_count_; }

    /// Left-hand side of inequality k at w (>= 0 iff satisfied).
    Int evaluate(int k, std::span<const Int> w) const;
    Rat evaluate(int k, std::span<const Rat> w) const;

    /// Dense {-1,0,1} coefficient row of inequality k.
    std::vector<int> coefficient_row(int k) const;

private:
    BinaryMatrix H_;
    std::vector<Inequality> ineqs_;
    int parity_count_ = 0;
};

/// A pseudo-codeword candidate: exact nonnegative entries together with the
/// canonical integer scaling (smallest integer multiple whose mod-2 reduction
/// is a codeword).
struct RayVector {
    std::vector<Rat> entries;
    std::vector<Int> canonical_int;
    bool is_codeword_multiple = false;

    static RayVector from_ints(std::vector<Int> v);  // entries = v, canonical unset
    std::size_t size() const { return entries.size(); }
};

/// Decides membership of a 0/1 word in the code; used by canonical scaling.
using CodewordOracle = std::function<bool(const std::vector<std::uint8_t>&)>;

/// Oracle answering H x^T = 0 (mod 2).
CodewordOracle make_codeword_oracle(const BinaryMatrix& H);

struct MembershipFailure {
    int inequality = -1;  // violated index, or -1 for a negative entry
    std::string diagnostic;
};

/// Exact membership test; no tolerances. A negative entry is reported as
/// non-membership with a diagnostic rather than an exception.
bool is_pseudocodeword(std::span<const Rat> w, const ConeSystem& cone,
                       MembershipFailure* failure = nullptr);
bool is_pseudocodeword(const RayVector& w, const ConeSystem& cone,
                       MembershipFailure* failure = nullptr);

/// Indices (in system order) of inequalities satisfied with equality.
/// Throws std::invalid_argument if w is not a member.
std::vector<int> active_set(std::span<const Rat> w, const ConeSystem& cone);
std::vector<int> active_set(const RayVector& w, const ConeSystem& cone);

/// True iff the active inequalities' coefficient matrix has rank exactly
/// n-1 over the rationals, i.e. w spans an edge of the cone. Throws on the
/// zero vector or a non-member.
bool is_minimal_pseudocodeword(std::span<const Rat> w, const ConeSystem& cone);
bool is_minimal_pseudocodeword(const RayVector& w, const ConeSystem& cone);

/// Canonical scaling: clear denominators and the content to get the
/// primitive integer vector p; keep p if p mod 2 is a codeword, else take
/// 2p (an even vector reduces to the zero codeword, which is always valid).
/// is_codeword_multiple is set iff p itself is a 0/1 codeword.
/// Throws std::invalid_argument on zero or negative input.
RayVector canonical_scale(std::span<const Rat> w, const CodewordOracle& code);
RayVector canonical_scale(std::span<const Int> w, const CodewordOracle& code);

}  // namespace pgldpc
