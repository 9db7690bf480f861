#include "clgeo/search.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>

#include "clgeo/incidence.hpp"

namespace clgeo {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::lcm;
using boost::multiprecision::numerator;

// Integer-scaled dependency data of the incidence row space: every row-space
// vector is determined by its values on the pivot columns, and column j of
// the scaled vector equals sum of terms[i][j] over pivot rows i assigned 1.
struct Dependency {
    int rank = 0, cols = 0;
    BigInt scale;                                            // all entries multiplied by this
    std::vector<std::vector<std::pair<int, BigInt>>> terms;  // per row: (col, entry)
    std::vector<std::vector<int>> support;                   // per col: rows with nonzero entry
    std::vector<int> pivots;                                 // pivot column per row
};

Dependency build_dependency(const Echelon& e) {
    Dependency d;
    d.rank = e.rank;
    d.cols = e.cols;
    d.pivots = e.pivots;
    d.scale = 1;
    for (int i = 0; i < e.rank; ++i)
        for (int j = 0; j < e.cols; ++j)
            if (!e.at(i, j).is_zero()) d.scale = lcm(d.scale, denominator(e.at(i, j)));
    d.terms.resize(e.rank);
    d.support.resize(e.cols);
    for (int i = 0; i < e.rank; ++i)
        for (int j = 0; j < e.cols; ++j) {
            const Rational& v = e.at(i, j);
            if (v.is_zero()) continue;
            d.terms[i].push_back({j, numerator(v) * (d.scale / denominator(v))});
            d.support[j].push_back(i);
        }
    return d;
}

// Assignment order of the pivot rows: greedily pick the row that completes
// the supports of the most still-undetermined columns. Early determined
// columns give the earliest 0/1 cuts.
std::vector<int> greedy_order(const Dependency& d) {
    std::vector<bool> assigned(d.rank, false), determined(d.cols, false);
    std::vector<int> missing(d.cols);
    for (int j = 0; j < d.cols; ++j) {
        missing[j] = static_cast<int>(d.support[j].size());
        if (missing[j] == 0) determined[j] = true;
    }
    std::vector<int> order;
    for (int step = 0; step < d.rank; ++step) {
        int best = -1, best_gain = -1;
        for (int i = 0; i < d.rank; ++i) {
            if (assigned[i]) continue;
            int gain = 0;
            for (const auto& [j, v] : d.terms[i])
                if (!determined[j] && missing[j] == 1) ++gain;
            if (gain > best_gain) {
                best_gain = gain;
                best = i;
            }
        }
        assigned[best] = true;
        order.push_back(best);
        for (const auto& [j, v] : d.terms[best])
            if (!determined[j] && --missing[j] == 0) determined[j] = true;
    }
    return order;
}

// DFS state shared across the recursion; Int is the accumulator type.
template <typename Int>
struct Searcher {
    const Dependency& d;
    std::vector<int> order;                    // row assigned at each depth
    std::vector<std::vector<int>> checks;      // columns fully determined at each depth
    std::vector<std::vector<std::pair<int, Int>>> terms;  // converted row terms
    Int one;                                   // scaled value of 1
    std::vector<Int> acc;
    std::vector<int> values;  // 0/1 per depth
    long long budget;
    long long nodes = 0;
    bool exhausted_budget = false;
    std::vector<std::vector<int>> results;  // member column lists

    Searcher(const Dependency& dep, std::vector<int> ord, long long b)
        : d(dep), order(std::move(ord)), budget(b) {
        std::vector<int> pos(d.rank);
        for (int t = 0; t < d.rank; ++t) pos[order[t]] = t;
        checks.assign(d.rank + 1, {});
        for (int j = 0; j < d.cols; ++j) {
            int depth = 0;
            for (int i : d.support[j]) depth = std::max(depth, pos[i] + 1);
            checks[depth].push_back(j);
        }
        terms.resize(d.rank);
        for (int i = 0; i < d.rank; ++i)
            for (const auto& [j, v] : d.terms[i]) terms[i].push_back({j, static_cast<Int>(v)});
        one = static_cast<Int>(d.scale);
        acc.assign(d.cols, Int(0));
        values.assign(d.rank, 0);
    }

    bool check_depth(int depth) const {
        for (int j : checks[depth])
            if (acc[j] != 0 && acc[j] != one) return false;
        return true;
    }

    void run(int depth) {
        if (exhausted_budget) return;
        if (depth == d.rank) {
            std::vector<int> members;
            for (int j = 0; j < d.cols; ++j)
                if (acc[j] == one) members.push_back(j);
            results.push_back(std::move(members));
            return;
        }
        const int row = order[depth];
        for (int bit = 0; bit <= 1; ++bit) {
            if (++nodes > budget) {
                exhausted_budget = true;
                return;
            }
            if (bit == 1)
                for (const auto& [j, v] : terms[row]) acc[j] += v;
            values[depth] = bit;
            if (check_depth(depth + 1)) run(depth + 1);
            if (bit == 1)
                for (const auto& [j, v] : terms[row]) acc[j] -= v;
            if (exhausted_budget) return;
        }
    }
};

bool fits_int64(const Dependency& d) {
    const BigInt limit = (BigInt(1) << 62);
    BigInt worst = d.scale;
    for (const auto& row : d.terms)
        for (const auto& [j, v] : row) worst = std::max(worst, BigInt(abs(v)));
    return worst * (d.rank + 1) < limit;
}

}  // namespace

ClassificationRun classify(const Geometry& g, int k, long long budget) {
    const auto start = std::chrono::steady_clock::now();
    const auto& space = IncidenceSpace::get(g, k);
    Dependency dep = build_dependency(space.echelon());
    std::vector<int> order = greedy_order(dep);

    ClassificationRun run{g, k, {}, 0, {}, false, 0.0};
    for (int i : order) run.pivot_order.push_back(dep.pivots[i]);

    std::vector<std::vector<int>> results;
    if (fits_int64(dep)) {
        Searcher<long long> s(dep, order, budget);
        s.run(0);
        run.nodes = s.nodes;
        run.exhaustive = !s.exhausted_budget;
        results = std::move(s.results);
    } else {
        Searcher<BigInt> s(dep, order, budget);
        s.run(0);
        run.nodes = s.nodes;
        run.exhaustive = !s.exhausted_budget;
        results = std::move(s.results);
    }
    for (auto& members : results) run.found.push_back(make_kset(g, k, std::move(members)));
    run.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return run;
}

ClassificationRun classify_stretch(long long budget) {
    Geometry g(Kind::PG, 3, Field::get(3, 1));
    return classify(g, 1, budget);
}

CrossValidation cross_validate(const ClassificationRun& run,
                               const std::vector<Spread>& spreads, unsigned seed) {
    // (a) every found set meets every spread in exactly its parameter
    for (const KSet& L : run.found) {
        const Rational x = L.parameter();
        for (const Spread& s : spreads) {
            int hits = 0;
            for (int id : s.members)
                if (L.contains_id(id)) ++hits;
            if (Rational(hits) != x) return {false, L.members};
        }
    }

    std::set<std::vector<int>> known;
    for (const KSet& L : run.found) known.insert(L.members);

    const auto& space = IncidenceSpace::get(run.g, run.k);
    const Echelon& e = space.echelon();

    // (b) small ranks: plain unpruned re-enumeration of all 2^rank row-space
    // vectors must reproduce the output exactly
    if (run.exhaustive && e.rank <= 16) {
        std::set<std::vector<int>> plain;
        for (long long mask = 0; mask < (1LL << e.rank); ++mask) {
            std::vector<Rational> v(e.cols, Rational(0));
            for (int i = 0; i < e.rank; ++i)
                if (mask & (1LL << i))
                    for (int j = 0; j < e.cols; ++j) v[j] += e.at(i, j);
            bool zero_one = true;
            std::vector<int> members;
            for (int j = 0; j < e.cols && zero_one; ++j) {
                if (v[j] == 1)
                    members.push_back(j);
                else if (!v[j].is_zero())
                    zero_one = false;
            }
            if (zero_one) plain.insert(std::move(members));
        }
        if (plain != known) {
            for (const auto& m : plain)
                if (!known.count(m)) return {false, m};
            for (const auto& m : known)
                if (!plain.count(m)) return {false, m};
        }
    }

    // (c) randomized hill search for spread-constant sets outside the output
    if (!spreads.empty()) {
        const int total = SubspaceTable::get(run.g, run.k).size();
        std::mt19937 rng(seed);
        std::uniform_int_distribution<int> pick(0, total - 1);
        auto cost = [&](const std::vector<char>& in) {
            // variance of the spread-intersection counts
            long long sum = 0;
            std::vector<int> c(spreads.size());
            for (std::size_t s = 0; s < spreads.size(); ++s) {
                int hits = 0;
                for (int id : spreads[s].members) hits += in[id];
                c[s] = hits;
                sum += hits;
            }
            long long n = static_cast<long long>(spreads.size());
            long long cst = 0;
            for (int h : c) {
                long long dlt = h * n - sum;
                cst += dlt * dlt;
            }
            return cst;
        };
        for (int attempt = 0; attempt < 40; ++attempt) {
            std::vector<char> in(total, 0);
            for (int j = 0; j < total; ++j) in[j] = static_cast<char>(rng() & 1);
            long long c = cost(in);
            for (int step = 0; step < 4000 && c > 0; ++step) {
                int j = pick(rng);
                in[j] ^= 1;
                long long c2 = cost(in);
                if (c2 <= c)
                    c = c2;
                else
                    in[j] ^= 1;
            }
            if (c == 0) {
                std::vector<int> members;
                for (int j = 0; j < total; ++j)
                    if (in[j]) members.push_back(j);
                // a spread-constant set must be CL here; the run must know it
                KSet L = make_kset(run.g, run.k, members);
                bool constant_is_parameter = spreads.empty();
                if (!spreads.empty()) {
                    int hits = 0;
                    for (int id : spreads[0].members) hits += L.contains_id(id);
                    constant_is_parameter = Rational(hits) == L.parameter();
                }
                if (constant_is_parameter && !known.count(members)) return {false, members};
            }
        }
    }
    return {true, std::nullopt};
}

}  // namespace clgeo
