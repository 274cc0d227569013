#include "cubic/vinberg.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace cubic {

namespace {

void require_vinberg_form(const ZForm& form)
{
    if (!form.is_diagonal())
        throw PreconditionError("Vinberg enumeration needs a diagonal form");
    if (form.gram(0, 0) >= 0)
        throw PreconditionError("first diagonal entry must be negative");
    for (std::size_t i = 1; i < form.dimension(); ++i)
        if (form.gram(i, i) <= 0)
            throw PreconditionError("form must have signature (n,1) with the negative entry first");
}

ZVec unit_k(std::size_t n)
{
    ZVec k(n, 0);
    k[0] = 1;
    return k;
}

void enumerate(const ZForm& form, std::size_t i, const Integer& budget, ZVec& cur, std::vector<ZVec>& out)
{
    std::size_t n = form.dimension();
    if (i == n) {
        if (budget == 0)
            out.push_back(cur);
        return;
    }
    const Integer& g = form.gram(i, i);
    Integer bound = sqrt(Integer(budget / g));
    for (Integer y = -bound; y <= bound; ++y) {
        Integer rest = budget - g * y * y;
        if (rest < 0)
            continue;
        cur[i] = y;
        enumerate(form, i + 1, rest, cur, out);
    }
    cur[i] = 0;
}

bool positive_in(const ZVec& r, const std::vector<std::size_t>& order)
{
    for (auto i : order) {
        if (r[i] > 0)
            return true;
        if (r[i] < 0)
            return false;
    }
    return false;
}

Rational priority(const ZForm& form, const Integer& m, const Integer& n)
{
    Integer km = form.gram(0, 0) * m;
    return make_rational(km * km, n);
}

} // namespace

std::vector<std::size_t> default_seed_order(const ZForm& form)
{
    std::vector<std::size_t> order;
    for (std::size_t i = 1; i < form.dimension(); ++i)
        if (form.gram(i, i) == 1)
            order.push_back(i);
    for (std::size_t i = form.dimension(); i-- > 1;)
        if (form.gram(i, i) != 1)
            order.push_back(i);
    return order;
}

std::vector<ZVec> roots_with(const ZForm& form, const Integer& m, const Integer& n)
{
    require_vinberg_form(form);
    Integer budget = n - form.gram(0, 0) * m * m;
    std::vector<ZVec> vecs;
    if (budget < 0)
        return vecs;
    ZVec cur(form.dimension(), 0);
    cur[0] = m;
    enumerate(form, 1, budget, cur, vecs);
    std::vector<ZVec> out;
    for (auto& v : vecs)
        if (is_root(form, v))
            out.push_back(std::move(v));
    std::sort(out.begin(), out.end());
    return out;
}

VinbergState make_state(const ZForm& form)
{
    require_vinberg_form(form);
    VinbergState s;
    s.form = form;
    s.k = unit_k(form.dimension());
    for (const auto& n : candidate_root_norms(form))
        s.cursor[n] = 1;
    return s;
}

std::vector<ZVec> seed_batch(const ZForm& form, const ZVec& k, const VinbergOptions& opt)
{
    require_vinberg_form(form);
    if (k != unit_k(form.dimension()))
        throw PreconditionError("controlling vector must be (1,0,...,0)");
    std::vector<std::size_t> order = opt.seed_order.empty() ? default_seed_order(form) : opt.seed_order;
    std::set<ZVec> positive;
    for (const auto& n : candidate_root_norms(form))
        for (auto& r : roots_with(form, 0, n))
            if (positive_in(r, order))
                positive.insert(r);
    // r is simple iff its reflection permutes the other positive roots
    std::vector<ZVec> simple;
    for (const auto& r : positive) {
        bool ok = true;
        for (const auto& p : positive) {
            if (p == r)
                continue;
            if (!positive.count(reflect(form, r, p))) {
                ok = false;
                break;
            }
        }
        if (ok)
            simple.push_back(r);
    }
    return simple;
}

std::vector<ZVec> next_batch(VinbergState& state)
{
    if (state.cursor.empty())
        throw PreconditionError("state has no candidate norms");
    Rational best;
    bool have = false;
    for (const auto& [n, m] : state.cursor) {
        Rational p = priority(state.form, m, n);
        if (!have || p < best) {
            best = p;
            have = true;
        }
    }
    std::vector<ZVec> cands;
    for (auto& [n, m] : state.cursor)
        if (priority(state.form, m, n) == best) {
            auto rs = roots_with(state.form, m, n);
            cands.insert(cands.end(), rs.begin(), rs.end());
            m += 1;
        }
    std::sort(cands.begin(), cands.end());
    state.processed_priorities.push_back(best);
    std::vector<ZVec> batch;
    for (const auto& c : cands) {
        bool ok = true;
        for (const auto& a : state.accepted)
            if (inner_product(state.form, c, a) > 0) {
                ok = false;
                break;
            }
        if (ok) {
            state.accepted.push_back(c);
            batch.push_back(c);
        }
    }
    return batch;
}

bool finite_volume_test(const CoxeterDiagram& d, int dim)
{
    auto info = classify_all_subdiagrams(d);
    std::vector<std::uint32_t> edges, ends;
    for (std::uint32_t m = 1; m < info.size(); ++m) {
        const auto& s = info[m];
        int k = std::popcount(m);
        if (s.kind == SubdiagramKind::Elliptic && k == dim - 1)
            edges.push_back(m);
        if ((s.kind == SubdiagramKind::Elliptic && k == dim) || (s.kind == SubdiagramKind::Parabolic && s.rank == dim - 1))
            ends.push_back(m);
    }
    if (ends.empty())
        return false;
    for (auto e : edges) {
        int count = 0;
        for (auto v : ends)
            if ((v & e) == e)
                ++count;
        if (count != 2)
            return false;
    }
    return true;
}

namespace {

std::vector<std::string> default_names(std::size_t n)
{
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i)
        names.push_back("v" + std::to_string(i + 1));
    return names;
}

} // namespace

VinbergResult run_vinberg(const ZForm& form, const VinbergOptions& opt)
{
    VinbergState state = make_state(form);
    int dim = static_cast<int>(form.dimension()) - 1;
    VinbergResult res;
    state.accepted = seed_batch(form, state.k, opt);
    res.priorities.assign(state.accepted.size(), Rational(0));
    for (std::size_t level = 0; level < opt.max_levels; ++level) {
        auto batch = next_batch(state);
        res.levels = level + 1;
        for (std::size_t i = 0; i < batch.size(); ++i)
            res.priorities.push_back(state.processed_priorities.back());
        if (batch.empty())
            continue;
        CoxeterDiagram d = diagram_from_roots(form, state.accepted, default_names(state.accepted.size()));
        if (finite_volume_test(d, dim)) {
            res.roots = state.accepted;
            res.diagram = d;
            return res;
        }
    }
    throw PreconditionError("Vinberg's algorithm did not terminate within " + std::to_string(opt.max_levels) +
                            " priority levels (the form may not be reflective)");
}

} // namespace cubic
