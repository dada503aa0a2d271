#pragma once

#include <chrono>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pgldpc/bitset.hpp"
#include "pgldpc/cone.hpp"

namespace pgldpc {

/// Enumeration exceeded its wall-clock or ray-count budget. Progress is
/// carried in the message; no partial ray set is exposed.
class ResourceLimitError : public std::runtime_error {
public:
    ResourceLimitError(const std::string& what, int inserted, std::size_t rays)
        : std::runtime_error(what + " (inserted " + std::to_string(inserted) +
                             " inequalities, current ray count " + std::to_string(rays) + ")"),
          inserted_inequalities(inserted),
          current_rays(rays) {}
    int inserted_inequalities;
    std::size_t current_rays;
};

class DimensionLimitError : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Incremental double description over {w >= 0}: insert inequalities
/// a_k . w >= 0 one at a time, maintaining the extreme rays of the running
/// intersection. Adjacency of a positive/negative ray pair is certified by
/// the algebraic test: the inequalities tight at both must have rank n-2.
///
/// Arithmetic is exact. Ray entries are primitive integer vectors; for
/// systems of at most 26 variables with unit-size coefficients every entry
/// is bounded by a minor of the inequality matrix and fits in int64
/// (combinations are formed in 128-bit and reduced by their gcd).
class DoubleDescription {
public:
    struct Limits {
        double budget_seconds = 0;  // 0 = unlimited
        std::size_t ray_cap = 0;    // 0 = unlimited
    };

    DoubleDescription(int n, std::vector<std::vector<long long>> inequality_rows, Limits limits = {});

    /// Inserts the next inequality; returns false once all are inserted.
    bool step();
    void run();

    int inserted() const { return next_; }
    int total_inequalities() const { return static_cast<int>(rows_.size()); }
    std::size_t ray_count() const { return rays_.size(); }

    /// Current extreme rays as primitive integer vectors, sorted
    /// lexicographically. Valid after any number of steps.
    std::vector<std::vector<long long>> rays() const;

private:
    struct Ray {
        std::vector<long long> v;
        Bitset tight;  // [0,P): inserted inequalities, [P,P+n): nonnegativity
    };

    bool adjacent(const Ray& a, const Ray& b) const;
    Ray make_ray(std::vector<long long> v) const;
    void check_budget() const;

    int n_;
    std::vector<std::vector<long long>> rows_;
    Limits limits_;
    std::vector<Ray> rays_;
    int next_ = 0;
    std::chrono::steady_clock::time_point start_;
};

/// All distinct cyclic shifts of w, sorted lexicographically.
std::vector<std::vector<Int>> cyclic_orbit(std::span<const Int> w, int n);

/// Complete set of minimal pseudo-codewords of a fundamental cone.
struct RaySet {
    int n = 0;
    std::vector<RayVector> rays;  // canonically scaled, sorted lex by canonical_int
    std::vector<int> orbit_of;    // ray index -> orbit id
    std::vector<int> orbit_reps;  // orbit id -> index of the lex-smallest member
    std::vector<int> orbit_sizes;
    int group_order_used = 1;
    /// How many rays' primitive vectors already reduce (mod 2) to a codeword,
    /// i.e. needed no doubling in canonical scaling.
    std::size_t primitive_mod2_codeword_count = 0;

    std::size_t class_count() const { return orbit_reps.size(); }
};

struct EnumerationOptions {
    bool use_symmetry = true;
    double budget_seconds = 0;  // 0 = unlimited
    std::size_t ray_cap = 0;    // 0 = unlimited
    int dimension_limit = 21;
    /// Permutation of the parity-inequality indices; empty = system order
    /// (row-major), which is the documented default.
    std::vector<int> insertion_order;
};

/// Enumerates all extreme rays (minimal pseudo-codewords) of the cone by
/// double description, verifies minimality of each output ray, canonically
/// scales, and decomposes into cyclic-shift orbits. With use_symmetry the
/// per-ray verification and scaling run on orbit representatives only and
/// orbits are expanded by shifting; the result is identical either way.
RaySet enumerate_rays(const ConeSystem& cone, const CodewordOracle& code,
                      const EnumerationOptions& opt = {});

}  // namespace pgldpc
