#pragma once

#include <deque>
#include <queue>
#include <random>
#include <unordered_map>

#include "cover.hpp"
#include "map_homotopy.hpp"
#include "winding.hpp"

namespace digitopo {

struct SearchBudget {
    int max_factor = 3;
    std::size_t max_steps = 20000;
};

enum class Verdict { equivalent, separated_by_invariant, inconclusive };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::equivalent: return "equivalent";
        case Verdict::separated_by_invariant: return "separated-by-invariant";
        default: return "inconclusive";
    }
}

struct SearchResult {
    Verdict verdict = Verdict::inconclusive;
    std::optional<EquivalenceWitness> witness;
    std::size_t explored = 0;
    std::string note;
};

// A class invariant of based loops; nullopt when it does not apply.
using Invariant = std::function<std::optional<Coord>(const LatticeLoop&)>;
using StepObserver = std::function<void(const LatticeLoop&, const LatticeLoop&)>;

namespace detail {

using Code = std::vector<std::uint32_t>;

struct CodeHash {
    std::size_t operator()(const Code& c) const {
        std::size_t h = 1469598103934665603ull;
        for (auto v : c) h = (h ^ v) * 1099511628211ull;
        return h;
    }
};

class Indexed {
public:
    explicit Indexed(const DigitalImage& X) : X_(X) {}

    bool adj(std::uint32_t i, std::uint32_t j) const {
        if (i == j) return true;
        const auto& n = X_.neighbours(i);
        return std::binary_search(n.begin(), n.end(), static_cast<std::size_t>(j));
    }

    // Point itself plus its neighbours, sorted.
    std::vector<std::uint32_t> closed(std::uint32_t i) const {
        std::vector<std::uint32_t> out{i};
        for (auto j : X_.neighbours(i)) out.push_back(static_cast<std::uint32_t>(j));
        std::sort(out.begin(), out.end());
        return out;
    }

    Code encode(const LatticePath& a) const {
        Code c;
        for (const auto& p : a.steps) c.push_back(static_cast<std::uint32_t>(X_.require_index(p)));
        return c;
    }

    LatticePath decode(const Code& c) const {
        LatticePath a;
        for (auto i : c) a.steps.push_back(X_.point(i));
        return a;
    }

    // Calls emit(b) for every loop one step from a, in lexicographic order, until emit returns false.
    template <class F>
    void for_each_step(const Code& a, F&& emit) const {
        const std::size_t M = a.size() - 1;
        if (M < 2) {
            emit(a);
            return;
        }
        Code b = a;
        bool go = true;
        std::function<void(std::size_t)> rec = [&](std::size_t s) {
            if (!go) return;
            if (s == M) {
                go = emit(b);
                return;
            }
            for (auto q : closed(a[s])) {
                if (!adj(q, a[s - 1]) || !adj(q, a[s + 1]) || !adj(q, b[s - 1])) continue;
                if (s == M - 1 && !adj(q, b[M])) continue;
                b[s] = q;
                rec(s + 1);
                if (!go) return;
            }
            b[s] = a[s];
        };
        rec(1);
    }

    // Loops differing from a only on positions [s, s+w).
    template <class F>
    void for_each_window_step(const Code& a, std::size_t s0, std::size_t w, F&& emit) const {
        const std::size_t M = a.size() - 1;
        Code b = a;
        std::function<void(std::size_t)> rec = [&](std::size_t s) {
            if (s == s0 + w) {
                if (adj(b[s - 1], b[s]) && b != a) emit(b);
                return;
            }
            for (auto q : closed(a[s])) {
                if (!adj(q, a[s - 1]) || !adj(q, a[s + 1]) || !adj(q, b[s - 1])) continue;
                b[s] = q;
                rec(s + 1);
            }
            b[s] = a[s];
        };
        if (s0 >= 1 && s0 + w <= M) rec(s0);
    }

    const DigitalImage& image() const { return X_; }

private:
    const DigitalImage& X_;
};

inline HomotopyGrid grid_from_chain(const DigitalImage& X, const Indexed& ix, const std::vector<Code>& chain) {
    std::vector<LatticePath> rows;
    for (const auto& c : chain) rows.push_back(ix.decode(c));
    return grid_from_rows(X, GridKind::based_loops, std::move(rows));
}

}  // namespace detail

// All loops one homotopy step from a, in lexicographic order.
inline std::vector<LatticeLoop> step_neighbours(const DigitalImage& X, const LatticeLoop& a, std::size_t limit = 100000) {
    detail::Indexed ix(X);
    std::vector<LatticeLoop> out;
    ix.for_each_step(ix.encode(a), [&](const detail::Code& b) {
        out.push_back(ix.decode(b));
        return out.size() < limit;
    });
    return out;
}

namespace detail {
inline std::vector<std::pair<int, int>> factor_pairs(std::size_t Ma, std::size_t Nb, int max_factor) {
    std::vector<std::pair<int, int>> out;
    for (int k = 1; k <= max_factor; ++k)
        for (int l = 1; l <= max_factor; ++l)
            if (static_cast<std::size_t>(k) * (Ma + 1) == static_cast<std::size_t>(l) * (Nb + 1)) out.emplace_back(k, l);
    std::sort(out.begin(), out.end(), [&](auto x, auto y) { return x.first * (Ma + 1) < y.first * (Ma + 1); });
    return out;
}
}  // namespace detail

// Breadth-first search over homotopy steps between reparametrizations of a and b.
inline SearchResult equivalent_bounded(const DigitalImage& X, const LatticeLoop& a, const LatticeLoop& b,
                                       const SearchBudget& budget = {}, const Invariant& invariant = {},
                                       const StepObserver& observer = {}) {
    require_loop(X, a);
    require_loop(X, b);
    SearchResult res;
    if (a == b) {
        res.verdict = Verdict::equivalent;
        res.witness = trivial_witness(X, a);
        return res;
    }
    if (invariant) {
        auto ia = invariant(a), ib = invariant(b);
        if (ia && ib && *ia != *ib) {
            res.verdict = Verdict::separated_by_invariant;
            res.note = "invariant " + std::to_string(*ia) + " vs " + std::to_string(*ib);
            return res;
        }
    }
    detail::Indexed ix(X);
    for (auto [k, l] : detail::factor_pairs(a.length(), b.length(), budget.max_factor)) {
        detail::Code start = ix.encode(reparam(a, k)), goal = ix.encode(reparam(b, l));
        if (start == goal) {
            res.verdict = Verdict::equivalent;
            res.witness = EquivalenceWitness{X, a, b, k, l, {}};
            return res;
        }
        std::vector<detail::Code> states{start};
        std::vector<std::size_t> parent{0};
        std::unordered_map<detail::Code, std::size_t, detail::CodeHash> seen{{start, 0}};
        std::optional<std::size_t> found;
        for (std::size_t head = 0; head < states.size() && !found; ++head) {
            const detail::Code cur = states[head];
            ix.for_each_step(cur, [&](const detail::Code& nb) {
                if (observer) observer(ix.decode(cur), ix.decode(nb));
                if (seen.count(nb)) return true;
                if (res.explored >= budget.max_steps) return false;
                ++res.explored;
                seen.emplace(nb, states.size());
                states.push_back(nb);
                parent.push_back(head);
                if (nb == goal) {
                    found = states.size() - 1;
                    return false;
                }
                return true;
            });
            if (res.explored >= budget.max_steps) break;
        }
        if (found) {
            std::vector<detail::Code> chain;
            for (std::size_t i = *found;; i = parent[i]) {
                chain.push_back(states[i]);
                if (i == 0) break;
            }
            std::reverse(chain.begin(), chain.end());
            res.verdict = Verdict::equivalent;
            res.witness = EquivalenceWitness{X, a, b, k, l, {detail::grid_from_chain(X, ix, chain)}};
            return res;
        }
        if (res.explored >= budget.max_steps) {
            res.note = "budget exhausted";
            break;
        }
    }
    if (res.note.empty()) res.note = "no witness within the factor bound";
    return res;
}

// Best-first search for a null homotopy using window moves, scored by the total
// graph distance of the loop to the basepoint.
inline SearchResult null_search(const DigitalImage& X, const LatticeLoop& a, const SearchBudget& budget = {}, std::size_t window = 2) {
    require_loop(X, a);
    SearchResult res;
    const auto base = static_cast<std::uint32_t>(X.require_index(X.require_basepoint()));
    std::vector<long> dist(X.size(), -1);
    {
        std::deque<std::size_t> q{base};
        dist[base] = 0;
        while (!q.empty()) {
            auto i = q.front();
            q.pop_front();
            for (auto j : X.neighbours(i))
                if (dist[j] < 0) {
                    dist[j] = dist[i] + 1;
                    q.push_back(j);
                }
        }
    }
    detail::Indexed ix(X);
    auto score = [&](const detail::Code& c) {
        long h = 0;
        for (auto v : c) h += dist[v];
        return h;
    };
    for (int k = 1; k <= budget.max_factor; ++k) {
        detail::Code start = ix.encode(reparam(a, k));
        if (score(start) == 0) {
            res.verdict = Verdict::equivalent;
            res.witness = EquivalenceWitness{X, a, constant_path(a.front(), a.length()), k, k, {}};
            return res;
        }
        std::vector<detail::Code> states{start};
        std::vector<std::size_t> parent{0};
        std::unordered_map<detail::Code, std::size_t, detail::CodeHash> seen{{start, 0}};
        using Item = std::tuple<long, std::size_t>;
        std::priority_queue<Item, std::vector<Item>, std::greater<Item>> open;
        open.emplace(score(start), 0);
        std::optional<std::size_t> found;
        const std::size_t M = start.size() - 1;
        while (!open.empty() && !found && res.explored < budget.max_steps) {
            auto [h, idx] = open.top();
            open.pop();
            const detail::Code cur = states[idx];
            for (std::size_t w = 1; w <= window && !found; ++w)
                for (std::size_t s = 1; s + w <= M && !found; ++s)
                    ix.for_each_window_step(cur, s, w, [&](const detail::Code& nb) {
                        if (found || seen.count(nb) || res.explored >= budget.max_steps) return;
                        ++res.explored;
                        seen.emplace(nb, states.size());
                        states.push_back(nb);
                        parent.push_back(idx);
                        long sc = score(nb);
                        if (sc == 0) found = states.size() - 1;
                        open.emplace(sc, states.size() - 1);
                    });
        }
        if (found) {
            std::vector<detail::Code> chain;
            for (std::size_t i = *found;; i = parent[i]) {
                chain.push_back(states[i]);
                if (i == 0) break;
            }
            std::reverse(chain.begin(), chain.end());
            res.verdict = Verdict::equivalent;
            res.witness = EquivalenceWitness{X, a, constant_path(a.front(), a.length()), k, k,
                                             {detail::grid_from_chain(X, ix, chain)}};
            return res;
        }
    }
    res.note = "no null homotopy found within budget";
    return res;
}

// Null homotopy of a winding-zero loop in D: lift to an interval, contract
// there, and wrap back down.
inline HomotopyGrid contract_winding_zero_loop(const LatticeLoop& a) {
    DigitalImage D = diamond();
    require_loop(D, a);
    auto lift = lift_path_D(a);
    if (lift.back() != lift.front()) throw Error(Error::Kind::precondition, "loop has nonzero winding");
    const Coord M = static_cast<Coord>(a.length());
    HomotopyGrid c = cube_contraction(M, CubeMode::symmetric);
    return make_grid(D, GridKind::based_loops, a.length(), static_cast<std::size_t>(M), [&](Coord s, Coord t) {
        Coord x = lift[static_cast<std::size_t>(s)];
        return wrap(c.at(static_cast<std::size_t>(x + M), static_cast<std::size_t>(t))[0]);
    });
}

// Winding for D and for its subdivisions (through rho_k).
inline Invariant diamond_invariant(const DigitalImage& X) {
    DigitalImage D = diamond();
    if (X.same_points(D)) return [](const LatticeLoop& a) -> std::optional<Coord> { return winding_class(a); };
    for (int k = 2; k <= 9; ++k)
        if (X.same_points(subdivide(D, k)))
            return [k](const LatticeLoop& a) -> std::optional<Coord> {
                LatticeLoop p;
                for (const auto& q : a.steps) p.steps.push_back(rho_point(q, k));
                return winding_class(p);
            };
    return {};
}

// Witnesses for the group laws at the level of representatives.
inline EquivalenceWitness right_identity_witness(const DigitalImage& X, const LatticeLoop& a) {
    LatticeLoop padded = concat(a, constant_path(a.back(), a.length()));
    return EquivalenceWitness{X, a, padded, 2, 1, {reparam_homotopy(X, a, 2, Side::right)}};
}

inline EquivalenceWitness left_identity_witness(const DigitalImage& X, const LatticeLoop& a) {
    LatticeLoop padded = concat(constant_path(a.front(), a.length()), a);
    return EquivalenceWitness{X, a, padded, 2, 1, {reparam_homotopy(X, a, 2, Side::left)}};
}

inline EquivalenceWitness inverse_witness(const DigitalImage& X, const LatticeLoop& a) {
    LatticeLoop both = concat(a, reverse(a));
    return EquivalenceWitness{X, both, constant_path(a.front(), both.length()), 1, 1, {inverse_homotopy(X, a, InverseForm::dot)}};
}

// Product of two witnessed equalities with matching factors: side by side.
inline std::optional<EquivalenceWitness> product_witness(const EquivalenceWitness& u, const EquivalenceWitness& v) {
    if (u.left_factor != v.left_factor || u.right_factor != v.right_factor || u.grids.size() > 1 || v.grids.size() > 1)
        return std::nullopt;
    EquivalenceWitness w{u.target, concat(u.left, v.left), concat(u.right, v.right), u.left_factor, u.right_factor, {}};
    if (u.grids.empty() && v.grids.empty()) return w;
    HomotopyGrid g1 = u.grids.empty() ? still(u.target, reparam(u.left, u.left_factor), 0) : u.grids[0];
    HomotopyGrid g2 = v.grids.empty() ? still(v.target, reparam(v.left, v.left_factor), 0) : v.grids[0];
    g1.kind = g2.kind = GridKind::based_loops;
    w.grids.push_back(side_concat(g1, g2));
    return w;
}

inline std::vector<std::string> induced_hom_check(const DigitalMap& f, const std::vector<EquivalenceWitness>& witnesses) {
    std::vector<std::string> out;
    if (!is_continuous(f)) out.push_back("map is not continuous");
    if (!is_based(f)) out.push_back("map is not based");
    if (!out.empty()) return out;
    for (std::size_t i = 0; i < witnesses.size(); ++i) {
        const auto& w = witnesses[i];
        for (auto& p : verify_witness(push_witness(f, w))) out.push_back("pushed witness " + std::to_string(i) + ": " + p);
        if (push(f, concat(w.left, w.right)) != concat(push(f, w.left), push(f, w.right)))
            out.push_back("push does not respect concatenation on witness " + std::to_string(i));
    }
    return out;
}

// Random based loop: a random walk out, then a shortest path home.
inline LatticeLoop random_loop(const DigitalImage& X, std::size_t max_len, std::mt19937_64& rng) {
    const auto base = X.require_index(X.require_basepoint());
    std::vector<long> dist(X.size(), -1);
    std::vector<std::size_t> toward(X.size(), base);
    std::deque<std::size_t> q{base};
    dist[base] = 0;
    while (!q.empty()) {
        auto i = q.front();
        q.pop_front();
        for (auto j : X.neighbours(i))
            if (dist[j] < 0) {
                dist[j] = dist[i] + 1;
                toward[j] = i;
                q.push_back(j);
            }
    }
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::size_t L = len(rng);
    std::vector<std::size_t> walk{base};
    while (walk.size() - 1 < L) {
        std::size_t cur = walk.back();
        std::size_t left = L - (walk.size() - 1);
        std::vector<std::size_t> opts{cur};
        for (auto j : X.neighbours(cur)) opts.push_back(j);
        std::vector<std::size_t> ok;
        for (auto j : opts)
            if (dist[j] >= 0 && static_cast<std::size_t>(dist[j]) + 1 <= left) ok.push_back(j);
        if (ok.empty()) break;
        std::uniform_int_distribution<std::size_t> pick(0, ok.size() - 1);
        walk.push_back(ok[pick(rng)]);
        if (static_cast<std::size_t>(dist[walk.back()]) + 1 > left) break;
    }
    while (walk.back() != base) walk.push_back(toward[walk.back()]);
    LatticeLoop a;
    for (auto i : walk) a.steps.push_back(X.point(i));
    return a;
}

// All based loops of length at most max_len, in length then lexicographic order.
inline std::vector<LatticeLoop> enumerate_loops(const DigitalImage& X, std::size_t max_len, std::size_t limit = 200000) {
    const auto base = X.require_index(X.require_basepoint());
    std::vector<long> dist(X.size(), -1);
    std::deque<std::size_t> q{base};
    dist[base] = 0;
    while (!q.empty()) {
        auto i = q.front();
        q.pop_front();
        for (auto j : X.neighbours(i))
            if (dist[j] < 0) {
                dist[j] = dist[i] + 1;
                q.push_back(j);
            }
    }
    std::vector<LatticeLoop> out;
    for (std::size_t L = 0; L <= max_len; ++L) {
        std::vector<std::size_t> cur{base};
        std::function<void()> rec = [&]() {
            if (out.size() >= limit) return;
            if (cur.size() == L + 1) {
                if (cur.back() == base) {
                    LatticeLoop a;
                    for (auto i : cur) a.steps.push_back(X.point(i));
                    out.push_back(std::move(a));
                }
                return;
            }
            std::vector<std::size_t> opts{cur.back()};
            for (auto j : X.neighbours(cur.back())) opts.push_back(j);
            std::sort(opts.begin(), opts.end());
            std::size_t left = L + 1 - cur.size() - 1;
            for (auto j : opts) {
                if (dist[j] < 0 || static_cast<std::size_t>(dist[j]) > left) continue;
                cur.push_back(j);
                rec();
                cur.pop_back();
            }
        };
        rec();
    }
    return out;
}

struct LoopClass {
    LatticeLoop representative;
    std::optional<Coord> invariant;
    std::vector<LatticeLoop> members;
    std::vector<EquivalenceWitness> witnesses;  // members[i] to the representative
};

struct ClassTable {
    DigitalImage image;
    std::size_t max_length = 0;
    std::size_t budget = 0;
    std::vector<LoopClass> classes;
    std::size_t unresolved = 0;  // loops placed in a class of their own without a separating invariant
};

inline ClassTable class_table(const DigitalImage& X, std::size_t max_len, const SearchBudget& budget = {}) {
    ClassTable T{X, max_len, budget.max_steps, {}, 0};
    Invariant inv = diamond_invariant(X);
    for (const auto& a : enumerate_loops(X, max_len)) {
        std::optional<Coord> ia;
        if (inv) ia = inv(a);
        bool placed = false;
        bool unresolved = false;
        for (auto& c : T.classes) {
            if (ia && c.invariant && *ia != *c.invariant) continue;
            // Any member will do: lengths that do not balance against the
            // representative within the factor bound may balance against another.
            for (std::size_t m = 0; m < c.members.size() && !placed; ++m) {
                auto r = equivalent_bounded(X, a, c.members[m], budget, inv);
                if (r.verdict != Verdict::equivalent) continue;
                c.witnesses.push_back(compose_witness(*r.witness, c.witnesses[m]));
                c.members.push_back(a);
                placed = true;
            }
            if (!placed && c.representative.steps.size() == 1) {
                // Null class: contract a, then shrink the constant loop.
                auto r = null_search(X, a, budget);
                if (r.witness) {
                    EquivalenceWitness shrink{X, r.witness->right, c.representative, 1,
                                              static_cast<int>(r.witness->right.steps.size()), {}};
                    c.witnesses.push_back(compose_witness(*r.witness, shrink));
                    c.members.push_back(a);
                    placed = true;
                }
            }
            if (placed) break;
            unresolved = true;
        }
        if (!placed) {
            if (unresolved) ++T.unresolved;
            T.classes.push_back(LoopClass{a, ia, {a}, {trivial_witness(X, a)}});
        }
    }
    return T;
}

struct IsoCase {
    std::string direction;  // "surjectivity" or "injectivity"
    LatticeLoop loop;
    std::string verdict;    // conclusive, separated-by-invariant, inconclusive, failure
    std::string detail;
};

struct IsoReport {
    int k = 0;
    std::vector<IsoCase> cases;

    std::size_t count(const std::string& dir, const std::string& verdict) const {
        std::size_t n = 0;
        for (const auto& c : cases)
            if (c.direction == dir && c.verdict == verdict) ++n;
        return n;
    }
    bool any_failure() const { return count("surjectivity", "failure") + count("injectivity", "failure") > 0; }
};

struct IsoSamples {
    std::size_t count = 8;
    std::size_t max_len = 8;
    std::uint64_t seed = 1;
    SearchBudget budget{};
};

// Evidence that rho_k : S(X,k) -> X is bijective on classes, at desk scale.
inline IsoReport rho_iso_evidence(const DigitalImage& X, int k, const IsoSamples& samples = {}) {
    if (k < 2) throw Error(Error::Kind::precondition, "rho_iso_evidence needs k >= 2");
    IsoReport rep;
    rep.k = k;
    std::mt19937_64 rng(samples.seed);
    const DigitalImage SX = subdivide(X, k);
    const DigitalMap rho = rho_map(SX, X, k);

    // Surjectivity: a preimage class for every sampled class of X.
    for (std::size_t n = 0; n < samples.count; ++n) {
        LatticeLoop a = random_loop(X, samples.max_len, rng);
        IsoCase c{"surjectivity", a, "failure", ""};
        try {
            LatticeLoop up;
            int factor = k;
            if (k % 2 == 1) {
                up = standard_cover(a, k / 2);
            } else {
                factor = k + 1;
                DigitalMap rc = rho_c_map(X, k + 1);
                up = push(rc, standard_cover(a, k / 2));
            }
            if (!is_loop(SX, up)) {
                c.detail = "lifted path is not a based loop";
            } else {
                LatticeLoop down = push(rho, up);
                EquivalenceWitness w{X, down, a, 1, factor, {}};
                auto probs = verify_witness(w);
                if (probs.empty()) {
                    c.verdict = "conclusive";
                    c.detail = "rho_k of the lift equals a∘rho_" + std::to_string(factor);
                } else {
                    c.detail = probs.front();
                }
            }
        } catch (const Error& e) {
            c.detail = e.what();
        }
        rep.cases.push_back(std::move(c));
    }

    // Injectivity: loops upstairs whose projection is null are null.
    Invariant inv = diamond_invariant(X);
    auto box = as_full_box(SX);
    for (std::size_t n = 0; n < samples.count; ++n) {
        LatticeLoop a = random_loop(SX, samples.max_len, rng);
        LatticeLoop down = push(rho, a);
        IsoCase c{"injectivity", a, "inconclusive", ""};
        try {
            if (inv && *inv(down) != 0) {
                c.verdict = "separated-by-invariant";
                c.detail = "projection has winding class " + std::to_string(*inv(down));
                rep.cases.push_back(std::move(c));
                continue;
            }
            std::optional<EquivalenceWitness> null;
            if (box) {
                HomotopyGrid g = loop_through(box_contraction(SX), a);
                null = EquivalenceWitness{SX, a, constant_path(a.front(), a.length()), 1, 1, {g}};
                c.detail = "box contraction";
            } else {
                auto r = null_search(SX, a, samples.budget);
                if (r.witness) null = r.witness;
                c.detail = "guided search, " + std::to_string(r.explored) + " states";
            }
            if (!null) {
                c.detail += "; no null homotopy found";
            } else if (auto probs = verify_witness(*null); !probs.empty()) {
                c.verdict = "failure";
                c.detail = probs.front();
            } else {
                c.verdict = "conclusive";
                if (k % 2 == 1 && null->grids.size() <= 1) {
                    // Tie the loop to the cover of its projection and run the chain.
                    const int kk = k / 2;
                    HomotopyGrid cor = reparam_to_cover_grid(SX, a, kk);
                    int m = null->left_factor;
                    HomotopyGrid pulled = null->grids.empty() ? still(SX, reparam(a, m * k), 0) : pull_reparam(null->grids[0], k);
                    pulled.kind = GridKind::based_loops;
                    LatticeLoop cov = standard_cover(down, kk);
                    EquivalenceWitness chain{SX, reparam(cov, 1), constant_path(a.front(), cov.length()), m, m, {}};
                    HomotopyGrid back = time_reverse(m == 1 ? cor : pull_reparam(cor, m));
                    chain.grids = {back, pulled};
                    auto chain_probs = verify_witness(chain);
                    if (!chain_probs.empty()) {
                        c.verdict = "failure";
                        c.detail = "cover chain: " + chain_probs.front();
                    } else {
                        c.detail += "; cover chain verified";
                    }
                }
            }
        } catch (const Error& e) {
            c.verdict = "failure";
            c.detail = e.what();
        }
        rep.cases.push_back(std::move(c));
    }
    return rep;
}

}  // namespace digitopo
