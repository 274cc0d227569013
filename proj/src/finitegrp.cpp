#include "cubic/finitegrp.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "cubic/chamber.hpp"

namespace cubic {

namespace {

using Raw = std::array<std::uint8_t, 25>;

Raw raw(PackedF3 p)
{
    Raw r;
    for (int i = 0; i < 25; ++i)
        r[i] = static_cast<std::uint8_t>((p >> (2 * i)) & 3u);
    return r;
}

PackedF3 cook(const Raw& r)
{
    PackedF3 p = 0;
    for (int i = 0; i < 25; ++i)
        p |= static_cast<PackedF3>(r[i]) << (2 * i);
    return p;
}

PackedF3 identity_packed()
{
    Raw r{};
    for (int i = 0; i < 5; ++i)
        r[6 * i] = 1;
    return cook(r);
}

PackedF3 inverse_of(PackedF3 x)
{
    // x^(k-1) where x^k = +-1 projectively; recompute exactly on the linear level
    PackedF3 id = identity_packed();
    PackedF3 p = x, prev = id;
    for (int k = 1; k < 200; ++k) {
        if (p == id)
            return prev;
        prev = p;
        p = multiply(p, x);
    }
    throw VerificationError("element of unexpectedly large order");
}

} // namespace

PackedF3 pack(const F3Matrix& m)
{
    if (m.rows() != 5 || m.cols() != 5)
        throw PreconditionError("V-matrices are 5x5");
    Raw r;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            r[5 * i + j] = m(i, j).value();
    return cook(r);
}

F3Matrix unpack(PackedF3 p)
{
    Raw r = raw(p);
    F3Matrix m(5, 5);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            m(i, j) = F3(r[5 * i + j]);
    return m;
}

PackedF3 multiply(PackedF3 x, PackedF3 y)
{
    Raw a = raw(x), b = raw(y), c;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            int s = 0;
            for (int k = 0; k < 5; ++k)
                s += a[5 * i + k] * b[5 * k + j];
            c[5 * i + j] = static_cast<std::uint8_t>(s % 3);
        }
    return cook(c);
}

PackedF3 projective(PackedF3 p)
{
    Raw r = raw(p);
    for (int i = 0; i < 25; ++i)
        if (r[i]) {
            if (r[i] == 2)
                for (auto& x : r)
                    x = static_cast<std::uint8_t>((3 - x) % 3);
            break;
        }
    return cook(r);
}

int f3_determinant(PackedF3 p) { return determinant(unpack(p)).balanced(); }

void GroupHandle::adjoin(PackedF3 x)
{
    x = projective(x);
    if (contains(x))
        return;
    gens_.push_back(x);
    for (std::size_t i = 0; i < elements_.size(); ++i)
        for (auto s : gens_) {
            PackedF3 y = projective(multiply(elements_[i], s));
            if (index_.emplace(y, static_cast<std::uint32_t>(elements_.size())).second)
                elements_.push_back(y);
        }
}

GroupHandle GroupHandle::closure(std::vector<PackedF3> gens)
{
    // Generators already in the subgroup built so far are dropped.
    GroupHandle g;
    PackedF3 id = projective(identity_packed());
    g.elements_.push_back(id);
    g.index_[id] = 0;
    for (auto x : gens)
        g.adjoin(x);
    return g;
}

GroupHandle GroupHandle::generate(const std::vector<F3Matrix>& gens, const F3QuadSpace& v)
{
    std::vector<PackedF3> packed;
    for (const auto& m : gens) {
        if (!v.preserves(m))
            throw PreconditionError("generator does not preserve q");
        packed.push_back(pack(m));
    }
    return closure(packed);
}

GroupHandle generate_group(const std::vector<F3Matrix>& gens) { return GroupHandle::generate(gens); }

int GroupHandle::element_order(PackedF3 x) const
{
    PackedF3 id = projective(identity_packed());
    x = projective(x);
    PackedF3 p = x;
    for (int k = 1; k < 1000; ++k) {
        if (p == id)
            return k;
        p = projective(multiply(p, x));
    }
    throw VerificationError("element order exceeds bound");
}

GroupHandle GroupHandle::derived_subgroup() const
{
    std::vector<PackedF3> comms;
    for (std::size_t a = 0; a < gens_.size(); ++a)
        for (std::size_t b = a + 1; b < gens_.size(); ++b) {
            PackedF3 x = gens_[a], y = gens_[b];
            PackedF3 c = multiply(multiply(x, y), multiply(inverse_of(x), inverse_of(y)));
            comms.push_back(projective(c));
        }
    GroupHandle n = closure(comms);
    // normal closure
    for (bool grew = true; grew;) {
        grew = false;
        for (auto g : gens_) {
            PackedF3 gi = inverse_of(g);
            for (std::size_t k = 0; k < n.gens_.size(); ++k) {
                PackedF3 c = projective(multiply(multiply(g, n.gens_[k]), gi));
                if (!n.contains(c)) {
                    n.adjoin(c);
                    grew = true;
                }
            }
        }
    }
    return n;
}

namespace {

std::vector<Integer> abelian_invariants(const std::map<std::size_t, std::size_t>& order_counts, std::size_t n)
{
    // order_counts: element order -> count, for an abelian group of order n
    std::vector<std::vector<int>> exps; // per prime, exponents of cyclic factors
    std::vector<std::size_t> primes;
    std::size_t m = n;
    for (std::size_t p = 2; p <= m; ++p) {
        if (m % p)
            continue;
        primes.push_back(p);
        while (m % p == 0)
            m /= p;
    }
    std::vector<std::vector<std::size_t>> powers_per_prime;
    for (auto p : primes) {
        // s_k = log_p #{a : a^(p^k) = 1}
        std::vector<int> s{0};
        std::size_t pk = 1;
        for (int k = 1;; ++k) {
            pk *= p;
            std::size_t c = 0;
            for (const auto& [o, cnt] : order_counts)
                if (pk % o == 0)
                    c += cnt;
            int sk = 0;
            for (std::size_t t = c; t > 1; t /= p)
                ++sk;
            s.push_back(sk);
            if (sk == s[k - 1])
                break;
        }
        // t_k = number of factors with exponent >= k
        std::vector<std::size_t> pw;
        for (std::size_t k = 1; k < s.size(); ++k) {
            int tk = s[k] - s[k - 1];
            int tk1 = k + 1 < s.size() ? s[k + 1] - s[k] : 0;
            std::size_t val = 1;
            for (std::size_t e = 0; e < k; ++e)
                val *= p;
            for (int c = 0; c < tk - tk1; ++c)
                pw.push_back(val);
        }
        std::sort(pw.rbegin(), pw.rend());
        powers_per_prime.push_back(pw);
    }
    std::size_t len = 0;
    for (auto& pw : powers_per_prime)
        len = std::max(len, pw.size());
    std::vector<Integer> inv(len, Integer(1));
    for (auto& pw : powers_per_prime)
        for (std::size_t i = 0; i < pw.size(); ++i)
            inv[i] *= static_cast<unsigned long>(pw[i]);
    std::sort(inv.begin(), inv.end());
    return inv;
}

} // namespace

Fingerprint GroupHandle::fingerprint() const
{
    Fingerprint f;
    f.order = order();
    for (auto x : elements_)
        ++f.element_orders[element_order(x)];
    GroupHandle cur = *this;
    f.derived_series.push_back(cur.order());
    GroupHandle first_derived;
    bool have_first = false;
    while (cur.order() > 1) {
        GroupHandle d = cur.derived_subgroup();
        if (!have_first) {
            first_derived = d;
            have_first = true;
        }
        if (d.order() == cur.order())
            break;
        f.derived_series.push_back(d.order());
        cur = d;
    }
    if (!have_first)
        return f;
    // G / G' by cosets
    std::vector<int> coset(order(), -1);
    std::vector<PackedF3> reps;
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (coset[i] >= 0)
            continue;
        int c = static_cast<int>(reps.size());
        reps.push_back(elements_[i]);
        for (auto nelt : first_derived.elements())
            coset[index_.at(projective(multiply(elements_[i], nelt)))] = c;
    }
    std::map<std::size_t, std::size_t> qorders;
    for (auto r : reps) {
        PackedF3 p = r;
        std::size_t k = 1;
        while (!first_derived.contains(p)) {
            p = projective(multiply(p, r));
            ++k;
        }
        ++qorders[k];
    }
    f.abelianization = abelian_invariants(qorders, reps.size());
    return f;
}

namespace {

std::vector<std::vector<int>> orbits_of(std::size_t n, const std::vector<std::vector<int>>& perms)
{
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& p : perms)
        for (std::size_t i = 0; i < n; ++i) {
            int a = find(static_cast<int>(i)), b = find(p[i]);
            if (a != b)
                parent[std::max(a, b)] = std::min(a, b);
        }
    std::map<int, std::vector<int>> groups;
    for (std::size_t i = 0; i < n; ++i)
        groups[find(static_cast<int>(i))].push_back(static_cast<int>(i));
    std::vector<std::vector<int>> out;
    for (auto& [k, g] : groups)
        out.push_back(g);
    return out;
}

} // namespace

std::vector<std::vector<int>> GroupHandle::plus_point_orbits() const
{
    std::vector<std::vector<int>> perms;
    for (auto g : gens_)
        perms.push_back(plus_point_permutation(unpack(g)));
    return orbits_of(plus_points().size(), perms);
}

std::vector<std::vector<int>> GroupHandle::base_orbits() const
{
    std::vector<std::vector<int>> perms;
    for (auto g : gens_)
        perms.push_back(base_permutation(unpack(g)));
    return orbits_of(bases().size(), perms);
}

F3Matrix v_reflection(const F3Vec& r, const F3QuadSpace& v)
{
    F3 qr = v.product(r, r);
    if (qr.is_zero())
        throw PreconditionError("reflection in an isotropic vector");
    F3Vec qrow = v.q * r;
    F3 c = F3(2) * inverse(qr);
    F3Matrix m = F3Matrix::identity(5);
    for (std::size_t a = 0; a < 5; ++a)
        for (std::size_t b = 0; b < 5; ++b)
            m(a, b) -= c * r[a] * qrow[b];
    return m;
}

namespace {

struct KnownGroup {
    std::string name;
    std::size_t order;
    std::vector<std::size_t> derived;
    std::map<int, std::size_t> element_orders; // empty: not compared
};

const std::vector<KnownGroup>& known_groups()
{
    static const std::vector<KnownGroup> table = {
        {"trivial", 1, {1}, {{1, 1}}},
        {"Z/2", 2, {2, 1}, {{1, 1}, {2, 1}}},
        {"A5", 60, {60}, {{1, 1}, {2, 15}, {3, 20}, {5, 24}}},
        {"S3xS3", 36, {36, 9, 1}, {{1, 1}, {2, 15}, {3, 8}, {6, 12}}},
        {"(Z/2)^3:Z/2", 16, {16, 2, 1}, {{1, 1}, {2, 11}, {4, 4}}},
        {"S4", 24, {24, 12, 4, 1}, {{1, 1}, {2, 9}, {3, 8}, {4, 6}}},
        {"S5", 120, {120, 60}, {{1, 1}, {2, 25}, {3, 20}, {4, 30}, {5, 24}, {6, 20}}},
        {"W(E6)", 51840, {51840, 25920}, {}},
    };
    return table;
}

} // namespace

std::string identify_group(const GroupHandle& g)
{
    if (g.order() > 51840)
        return "unrecognized(order=" + std::to_string(g.order()) + ")";
    Fingerprint f = g.fingerprint();
    for (const auto& k : known_groups()) {
        if (k.order != f.order || k.derived != f.derived_series)
            continue;
        if (!k.element_orders.empty() && k.element_orders != f.element_orders)
            continue;
        return k.name;
    }
    return "unrecognized(order=" + std::to_string(g.order()) + ")";
}

MonodromyReport monodromy_group(int j)
{
    Chamber c = build_chamber(j);
    MonodromyReport rep;
    rep.j = j;
    for (std::size_t i = 0; i < c.roots.size(); ++i) {
        Integer n = norm(c.form, c.roots[i]);
        if (n != 2 && n != 6)
            continue;
        Matrix<Integer> r = reflection_matrix(c.form, c.roots[i]);
        rep.chamber_generators.push_back(reduce_mod_theta(lambda_lift(j, r)));
    }
    for (std::size_t a = 1; a < c.automorphisms.size(); ++a)
        rep.chamber_generators.push_back(reduce_mod_theta(lambda_lift(j, c.automorphism_matrices[a])));

    // Schreier generators of the det = 1 subgroup, transversal {1, t}
    std::vector<PackedF3> gens;
    for (const auto& g : rep.chamber_generators)
        gens.push_back(pack(g));
    PackedF3 t = 0;
    bool have_t = false;
    for (auto g : gens)
        if (f3_determinant(g) == -1) {
            t = g;
            have_t = true;
            break;
        }
    std::vector<PackedF3> even;
    PackedF3 id = identity_packed();
    auto add = [&](PackedF3 x) {
        if (x != id && std::find(even.begin(), even.end(), x) == even.end())
            even.push_back(x);
    };
    for (auto g : gens) {
        if (f3_determinant(g) == 1 || !have_t) {
            add(g);
            if (have_t)
                add(multiply(multiply(t, g), inverse_of(t)));
        } else {
            add(multiply(g, inverse_of(t)));
            add(multiply(t, g));
        }
    }
    for (auto x : even)
        rep.even_generators.push_back(unpack(x));
    rep.group = GroupHandle::generate(rep.even_generators);
    rep.name = identify_group(rep.group);
    return rep;
}

} // namespace cubic
