#include "pgldpc/enumerate.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "pgldpc/rank.hpp"

namespace pgldpc {

namespace {

__int128 abs128(__int128 x) { return x < 0 ? -x : x; }

__int128 gcd128(__int128 a, __int128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

long long narrow128(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("double description entry exceeds int64");
    return static_cast<long long>(v);
}

long long dot_ll(const std::vector<long long>& a, const std::vector<long long>& b) {
    __int128 acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += static_cast<__int128>(a[i]) * b[i];
    return narrow128(acc);
}

std::vector<long long> shift_forward(const std::vector<long long>& v) {
    const std::size_t n = v.size();
    std::vector<long long> out(n);
    for (std::size_t i = 0; i < n; ++i) out[(i + 1) % n] = v[i];
    return out;
}

}  // namespace

DoubleDescription::DoubleDescription(int n, std::vector<std::vector<long long>> inequality_rows,
                                     Limits limits)
    : n_(n), rows_(std::move(inequality_rows)), limits_(limits) {
    if (n_ < 1 || n_ > 26)
        throw DimensionLimitError("double description supports 1..26 variables, got " + std::to_string(n_));
    for (const auto& r : rows_)
        if (static_cast<int>(r.size()) != n_)
            throw std::invalid_argument("inequality row length does not match the variable count");

    start_ = std::chrono::steady_clock::now();

    // Seed: the nonnegative orthant, extreme rays e_i.
    const int P = total_inequalities();
    rays_.reserve(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
        Ray r;
        r.v.assign(static_cast<std::size_t>(n_), 0);
        r.v[static_cast<std::size_t>(i)] = 1;
        r.tight = Bitset(P + n_);
        for (int j = 0; j < n_; ++j)
            if (j != i) r.tight.set(P + j);
        rays_.push_back(std::move(r));
    }
}

void DoubleDescription::check_budget() const {
    if (limits_.budget_seconds > 0) {
        auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        if (elapsed > limits_.budget_seconds)
            throw ResourceLimitError("wall-clock budget exceeded", next_, rays_.size());
    }
}

bool DoubleDescription::adjacent(const Ray& a, const Ray& b) const {
    if (Bitset::and_count(a.tight, b.tight) < n_ - 2) return false;
    Bitset t = a.tight & b.tight;

    // Tight nonnegativity bits pin coordinates to zero: treat them as unit
    // rows by dropping their columns, then eliminate the parity rows on the
    // remaining columns.
    const int P = total_inequalities();
    std::vector<int> cols;
    cols.reserve(static_cast<std::size_t>(n_));
    int unit_rows = 0;
    for (int i = 0; i < n_; ++i) {
        if (t.test(P + i))
            ++unit_rows;
        else
            cols.push_back(i);
    }

    std::vector<std::vector<long long>> M;
    t.for_each_set([&](int k) {
        if (k >= P) return;
        std::vector<long long> proj;
        proj.reserve(cols.size());
        for (int c : cols) proj.push_back(rows_[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)]);
        M.push_back(std::move(proj));
    });

    int rank = unit_rows + rank_small_int64(M, static_cast<int>(cols.size()));
    return rank == n_ - 2;
}

DoubleDescription::Ray DoubleDescription::make_ray(std::vector<long long> v) const {
    Ray r;
    r.tight = Bitset(total_inequalities() + n_);
    // next_ still points at the inequality being inserted when this is
    // called from step(); it is tight there by construction.
    for (int k = 0; k <= next_ && k < total_inequalities(); ++k)
        if (dot_ll(rows_[static_cast<std::size_t>(k)], v) == 0) r.tight.set(k);
    const int P = total_inequalities();
    for (int i = 0; i < n_; ++i)
        if (v[static_cast<std::size_t>(i)] == 0) r.tight.set(P + i);
    r.v = std::move(v);
    return r;
}

bool DoubleDescription::step() {
    if (next_ >= total_inequalities()) return false;
    check_budget();

    const auto& a = rows_[static_cast<std::size_t>(next_)];
    std::vector<long long> slack(rays_.size());
    std::vector<std::size_t> pos, neg, zer;
    for (std::size_t i = 0; i < rays_.size(); ++i) {
        slack[i] = dot_ll(a, rays_[i].v);
        if (slack[i] > 0)
            pos.push_back(i);
        else if (slack[i] < 0)
            neg.push_back(i);
        else
            zer.push_back(i);
    }

    if (neg.empty()) {
        for (auto i : zer) rays_[i].tight.set(next_);
        ++next_;
        return true;
    }

    std::vector<Ray> created;
    std::size_t pair_counter = 0;
    for (auto ip : pos) {
        for (auto in : neg) {
            if ((++pair_counter & 0xFFFF) == 0) check_budget();
            if (!adjacent(rays_[ip], rays_[in])) continue;

            // w = s+ * r-  -  s- * r+, then reduced to primitive form.
            const auto& vp = rays_[ip].v;
            const auto& vn = rays_[in].v;
            const __int128 sp = slack[ip];
            const __int128 sn = slack[in];
            std::vector<__int128> w(static_cast<std::size_t>(n_));
            __int128 g = 0;
            for (int c = 0; c < n_; ++c) {
                w[static_cast<std::size_t>(c)] =
                    sp * vn[static_cast<std::size_t>(c)] - sn * vp[static_cast<std::size_t>(c)];
                g = gcd128(g, w[static_cast<std::size_t>(c)]);
            }
            if (g == 0) throw std::logic_error("double description produced a zero combination");
            std::vector<long long> vv(static_cast<std::size_t>(n_));
            for (int c = 0; c < n_; ++c) vv[static_cast<std::size_t>(c)] = narrow128(w[static_cast<std::size_t>(c)] / g);

            Ray nr = make_ray(std::move(vv));
            if (!nr.tight.test(next_))
                throw std::logic_error("new double description ray is not tight at the inserted inequality");
            created.push_back(std::move(nr));

            if (limits_.ray_cap > 0 && zer.size() + pos.size() + created.size() > limits_.ray_cap)
                throw ResourceLimitError("ray cap exceeded", next_, zer.size() + pos.size() + created.size());
        }
    }

    std::vector<Ray> next_rays;
    next_rays.reserve(pos.size() + zer.size() + created.size());
    for (auto i : pos) next_rays.push_back(std::move(rays_[i]));
    for (auto i : zer) {
        rays_[i].tight.set(next_);
        next_rays.push_back(std::move(rays_[i]));
    }
    for (auto& r : created) next_rays.push_back(std::move(r));
    rays_ = std::move(next_rays);
    ++next_;
    return true;
}

void DoubleDescription::run() {
    while (step()) {
    }
}

std::vector<std::vector<long long>> DoubleDescription::rays() const {
    std::vector<std::vector<long long>> out;
    out.reserve(rays_.size());
    for (const auto& r : rays_) out.push_back(r.v);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<Int>> cyclic_orbit(std::span<const Int> w, int n) {
    if (static_cast<int>(w.size()) != n) throw std::invalid_argument("cyclic_orbit: length mismatch");
    std::vector<std::vector<Int>> orbit;
    std::vector<Int> cur(w.begin(), w.end());
    for (int j = 0; j < n; ++j) {
        orbit.push_back(cur);
        std::vector<Int> nxt(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) nxt[static_cast<std::size_t>((i + 1) % n)] = cur[static_cast<std::size_t>(i)];
        cur = std::move(nxt);
    }
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    return orbit;
}

namespace {

// Soundness check for enumerated rays: exact membership plus the rank-(n-1)
// minimality test, on the int64 fast path.
bool minimal_ray_int64(const std::vector<long long>& v, const ConeSystem& cone,
                       const std::vector<std::vector<long long>>& parity_rows) {
    const int n = cone.n();
    std::vector<std::vector<long long>> active;
    for (const auto& row : parity_rows) {
        long long s = dot_ll(row, v);
        if (s < 0) throw std::logic_error("enumerated ray violates a cone inequality");
        if (s == 0) active.push_back(row);
    }
    int zero_coords = 0;
    for (auto x : v) {
        if (x < 0) throw std::logic_error("enumerated ray has a negative entry");
        if (x == 0) ++zero_coords;
    }
    // Tight nonnegativity rows are unit rows; fold them in as pinned columns.
    std::vector<int> cols;
    for (int i = 0; i < n; ++i)
        if (v[static_cast<std::size_t>(i)] != 0) cols.push_back(i);
    std::vector<std::vector<long long>> proj;
    proj.reserve(active.size());
    for (const auto& row : active) {
        std::vector<long long> p;
        p.reserve(cols.size());
        for (int c : cols) p.push_back(row[static_cast<std::size_t>(c)]);
        proj.push_back(std::move(p));
    }
    return zero_coords + rank_small_int64(proj, static_cast<int>(cols.size())) == n - 1;
}

}  // namespace

RaySet enumerate_rays(const ConeSystem& cone, const CodewordOracle& code, const EnumerationOptions& opt) {
    const int n = cone.n();
    if (n > opt.dimension_limit)
        throw DimensionLimitError("cone has " + std::to_string(n) +
                                  " variables, above the configured limit of " +
                                  std::to_string(opt.dimension_limit));

    const int P = cone.parity_count();
    std::vector<std::vector<long long>> parity_rows;
    parity_rows.reserve(static_cast<std::size_t>(P));
    for (int k = 0; k < P; ++k) {
        auto row = cone.coefficient_row(k);
        parity_rows.emplace_back(row.begin(), row.end());
    }

    std::vector<std::vector<long long>> insertion = parity_rows;
    if (!opt.insertion_order.empty()) {
        if (static_cast<int>(opt.insertion_order.size()) != P)
            throw std::invalid_argument("insertion_order must permute all parity inequalities");
        insertion.clear();
        for (int k : opt.insertion_order) {
            if (k < 0 || k >= P) throw std::invalid_argument("insertion_order index out of range");
            insertion.push_back(parity_rows[static_cast<std::size_t>(k)]);
        }
    }

    DoubleDescription dd(n, std::move(insertion), {opt.budget_seconds, opt.ray_cap});
    dd.run();
    auto raw = dd.rays();  // primitive, lex-sorted

    const bool circulant = is_circulant(cone.matrix());
    const int group_order = circulant ? n : 1;

    std::map<std::vector<long long>, std::size_t> index_of;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (i > 0 && raw[i] == raw[i - 1]) throw std::logic_error("duplicate ray in double description output");
        index_of.emplace(raw[i], i);
    }

    // Orbit decomposition under the cyclic shift group (trivial group when
    // the matrix is not circulant). Scanning in lex order makes the first
    // unassigned member of each orbit its representative.
    std::vector<int> orbit_of(raw.size(), -1);
    std::vector<std::vector<std::size_t>> orbit_members;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (orbit_of[i] >= 0) continue;
        const int id = static_cast<int>(orbit_members.size());
        std::vector<std::size_t> members{i};
        orbit_of[i] = id;
        if (circulant) {
            auto cur = shift_forward(raw[i]);
            while (cur != raw[i]) {
                auto it = index_of.find(cur);
                if (it == index_of.end())
                    throw std::logic_error("ray set is not closed under cyclic shifts of a circulant cone");
                if (orbit_of[it->second] < 0) {
                    orbit_of[it->second] = id;
                    members.push_back(it->second);
                }
                cur = shift_forward(cur);
            }
        }
        orbit_members.push_back(std::move(members));
    }

    // Minimality certification: representatives only under symmetry, every
    // ray otherwise.
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const bool is_rep = orbit_members[static_cast<std::size_t>(orbit_of[i])].front() == i;
        if (opt.use_symmetry && circulant && !is_rep) continue;
        if (!minimal_ray_int64(raw[i], cone, parity_rows))
            throw std::logic_error("enumerated ray fails the rank-(n-1) minimality test");
    }

    // Canonical scaling; under symmetry the oracle decision is made per
    // representative and propagated along the orbit (the code is cyclic).
    std::vector<RayVector> canon(raw.size());
    for (const auto& members : orbit_members) {
        const std::size_t rep = members.front();
        std::vector<Int> rep_ints(raw[rep].begin(), raw[rep].end());
        RayVector rv = canonical_scale(std::span<const Int>(rep_ints), code);
        const bool doubled = rv.canonical_int != rep_ints;
        canon[rep] = std::move(rv);
        for (std::size_t mi = 1; mi < members.size(); ++mi) {
            const std::size_t m = members[mi];
            std::vector<Int> ints(raw[m].begin(), raw[m].end());
            if (opt.use_symmetry && circulant) {
                RayVector r;
                r.entries.reserve(ints.size());
                for (const auto& x : ints) r.entries.emplace_back(x);
                r.canonical_int.reserve(ints.size());
                for (const auto& x : ints) r.canonical_int.push_back(doubled ? Int(x * 2) : x);
                r.is_codeword_multiple = canon[rep].is_codeword_multiple;
                canon[m] = std::move(r);
            } else {
                canon[m] = canonical_scale(std::span<const Int>(ints), code);
            }
        }
    }

    // Assemble, sorted lexicographically by canonical form; orbits are
    // renumbered by first appearance in the sorted order.
    std::vector<std::size_t> order(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return canon[a].canonical_int < canon[b].canonical_int;
    });

    RaySet out;
    out.n = n;
    out.group_order_used = group_order;
    out.rays.reserve(raw.size());
    out.orbit_of.assign(raw.size(), -1);
    std::vector<int> orbit_renumber(orbit_members.size(), -1);
    std::vector<int> first_sorted_member(orbit_members.size(), -1);
    int next_orbit = 0;
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        const std::size_t i = order[pos];
        const auto old_id = static_cast<std::size_t>(orbit_of[i]);
        if (orbit_renumber[old_id] < 0) {
            orbit_renumber[old_id] = next_orbit++;
            first_sorted_member[old_id] = static_cast<int>(pos);
        }
        out.orbit_of[pos] = orbit_renumber[old_id];
        out.rays.push_back(std::move(canon[i]));
    }
    out.orbit_reps.assign(static_cast<std::size_t>(next_orbit), -1);
    out.orbit_sizes.assign(static_cast<std::size_t>(next_orbit), 0);
    for (std::size_t old_id = 0; old_id < orbit_members.size(); ++old_id) {
        const auto new_id = static_cast<std::size_t>(orbit_renumber[old_id]);
        out.orbit_reps[new_id] = first_sorted_member[old_id];
        out.orbit_sizes[new_id] = static_cast<int>(orbit_members[old_id].size());
    }

    for (std::size_t i = 0; i + 1 < out.rays.size(); ++i)
        if (out.rays[i].canonical_int == out.rays[i + 1].canonical_int)
            throw std::logic_error("positive-multiple duplicates in the final ray set");

    for (const auto& r : out.rays) {
        // Canonical content is 1 when the primitive form already reduced to
        // a codeword, 2 when doubling was applied.
        if (vector_content(std::span<const Int>(r.canonical_int)) == 1)
            ++out.primitive_mod2_codeword_count;
    }
    return out;
}

}  // namespace pgldpc
