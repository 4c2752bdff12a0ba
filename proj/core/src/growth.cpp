#include "hermcert/growth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace hermcert {

const char* provenance_name(GrowthProvenance p) {
    switch (p) {
        case GrowthProvenance::ExactClosedForm: return "exact-closed-form";
        case GrowthProvenance::PerronEnclosure: return "perron-enclosure";
        case GrowthProvenance::PaperConstant: return "paper-constant";
        case GrowthProvenance::UserAsserted: return "user-asserted";
        case GrowthProvenance::Empirical: return "empirical";
    }
    return "unknown";
}

GrowthEstimate growth_estimate(const BallTable& table) {
    int r = table.completed_radius();
    if (r < 2) throw std::invalid_argument("growth_estimate needs at least 2 enumerated radii");
    GrowthEstimate e;
    e.per_n_ball_roots.assign(static_cast<std::size_t>(r) + 1, 0.0);
    e.per_n_sphere_roots.assign(static_cast<std::size_t>(r) + 1, 0.0);
    e.per_n_sphere_ratios.assign(static_cast<std::size_t>(r) + 1, 0.0);
    double fekete = std::numeric_limits<double>::infinity();
    for (int n = 1; n <= r; ++n) {
        auto i = static_cast<std::size_t>(n);
        double ball = static_cast<double>(table.ball_sizes()[i]);
        double sphere = static_cast<double>(table.sphere_sizes()[i]);
        e.per_n_ball_roots[i] = std::pow(ball, 1.0 / n);
        e.per_n_sphere_roots[i] = sphere > 0 ? std::pow(sphere, 1.0 / n) : 0.0;
        double prev = static_cast<double>(table.sphere_sizes()[i - 1]);
        e.per_n_sphere_ratios[i] = prev > 0 ? sphere / prev : 0.0;
        fekete = std::min(fekete, e.per_n_ball_roots[i]);
    }
    e.fekete_upper = fekete;
    e.last_sphere_ratio = e.per_n_sphere_ratios[static_cast<std::size_t>(r)];
    if (table.generators_contain_identity())
        e.notes.push_back("generating set contains the identity; spheres are nested trivially");
    return e;
}

// ---------------------------------------------------------------------------
// Geodesic normal-form automaton for free products of cyclic groups.
//
// States are suffix windows of canonical forms (last W syllables, exponents
// clamped) plus a truncation flag. Each element's unique machine word is its
// shortlex-least geodesic: the automaton counts elements, not paths, because
// every element has exactly one canonical parent edge. Window determinism and
// level-count agreement are verified against a breadth-first enumeration
// before the automaton is trusted; any conflict fails the construction.

namespace {

struct Elem {
    Word word;
    int level = 0;
    int descent_gen = -1;  // first generator (fixed order) stepping down a level
};

struct BfsData {
    std::vector<Elem> elems;
    std::vector<std::vector<int>> levels;           // elem ids per level
    std::unordered_map<Word, int, WordHash> index;  // word -> elem id
};

BfsData run_bfs(const GeneratingSet& s, int depth) {
    const GroupBackend& g = *s.backend;
    BfsData d;
    d.elems.push_back({g.identity_word(), 0, -1});
    d.levels.push_back({0});
    d.index.emplace(d.elems[0].word, 0);

    std::vector<Word> inverse_gens;
    for (const Word& w : s.elements) inverse_gens.push_back(g.invert(w));

    for (int n = 0; n < depth; ++n) {
        std::vector<Word> frontier;
        for (int id : d.levels[static_cast<std::size_t>(n)]) {
            for (int gi = 0; gi < s.size(); ++gi) {
                Word h = g.multiply(d.elems[static_cast<std::size_t>(id)].word,
                                    s.elements[static_cast<std::size_t>(gi)]);
                if (!d.index.count(h)) {
                    d.index.emplace(h, -1);  // placeholder to dedup this level
                    frontier.push_back(std::move(h));
                }
            }
        }
        std::sort(frontier.begin(), frontier.end());
        std::vector<int> level;
        level.reserve(frontier.size());
        for (Word& w : frontier) {
            int id = static_cast<int>(d.elems.size());
            d.index[w] = id;
            d.elems.push_back({std::move(w), n + 1, -1});
            level.push_back(id);
        }
        d.levels.push_back(std::move(level));
    }

    // Canonical parent of h: h * inv(s) for the first generator s that steps
    // down a level. Every element has exactly one, so following these edges
    // counts elements, never paths; the rule is local to h.
    for (std::size_t id = 1; id < d.elems.size(); ++id) {
        Elem& e = d.elems[id];
        for (int gi = 0; gi < s.size(); ++gi) {
            Word parent = g.multiply(e.word, inverse_gens[static_cast<std::size_t>(gi)]);
            auto it = d.index.find(parent);
            if (it != d.index.end() &&
                d.elems[static_cast<std::size_t>(it->second)].level == e.level - 1) {
                e.descent_gen = gi;
                break;
            }
        }
    }
    return d;
}

Word window_key(const FreeProductCyclic& g, const Word& w, int window, int exp_cap) {
    int total = FreeProductCyclic::syllable_count(w);
    Word key;
    key.push_back(total > window ? 1 : 0);
    Word suffix = FreeProductCyclic::suffix_syllables(w, window);
    for (std::size_t i = 0; i < suffix.size(); i += 2) {
        std::int32_t f = suffix[i];
        std::int32_t e = suffix[i + 1];
        if (g.orders()[static_cast<std::size_t>(f - 1)] == 0) {
            if (e > exp_cap) e = exp_cap;
            if (e < -exp_cap) e = -exp_cap;
        }
        key.push_back(f);
        key.push_back(e);
    }
    return key;
}

struct Automaton {
    int start = 0;
    std::vector<std::vector<Integer>> matrix;  // canon-edge counts state -> state
};

enum class BuildStatus { Ok, Conflict, NeedDeeper };

BuildStatus try_build(const GeneratingSet& s, const BfsData& d, int window, int exp_cap,
                      Automaton* out) {
    const auto& g = dynamic_cast<const FreeProductCyclic&>(*s.backend);
    int depth = static_cast<int>(d.levels.size()) - 1;

    // Profile per element: for each generator, the window key of its canonical
    // child (or absent).
    using Profile = std::vector<std::optional<Word>>;
    std::map<Word, Profile> profile_of_key;

    for (const Elem& e : d.elems) {
        if (e.level > depth - 1) continue;  // children unknown at the horizon
        int id = d.index.at(e.word);
        Profile prof(static_cast<std::size_t>(s.size()));
        for (auto [gi, child] : d.canon[static_cast<std::size_t>(id)])
            prof[static_cast<std::size_t>(gi)] =
                window_key(g, d.elems[static_cast<std::size_t>(child)].word, window, exp_cap);
        Word key = window_key(g, e.word, window, exp_cap);
        auto it = profile_of_key.find(key);
        if (it == profile_of_key.end())
            profile_of_key.emplace(std::move(key), std::move(prof));
        else if (it->second != prof) {
            if (std::getenv("HERMCERT_DEBUG_AUTOMATON")) {
                std::fprintf(stderr, "conflict: key=");
                for (auto v : key) std::fprintf(stderr, "%d ", v);
                std::fprintf(stderr, " word=");
                for (auto v : e.word) std::fprintf(stderr, "%d ", v);
                std::fprintf(stderr, " level=%d\n", e.level);
            }
            return BuildStatus::Conflict;
        }
    }

    // Closure: every transition target must itself carry a profile.
    for (const auto& [key, prof] : profile_of_key)
        for (const auto& target : prof)
            if (target && !profile_of_key.count(*target)) {
                if (std::getenv("HERMCERT_DEBUG_AUTOMATON"))
                    std::fprintf(stderr, "needdeeper (window %d)\n", window);
                return BuildStatus::NeedDeeper;
            }

    std::map<Word, int> state_of;
    for (const auto& [key, prof] : profile_of_key)
        state_of.emplace(key, static_cast<int>(state_of.size()));

    Automaton a;
    int ns = static_cast<int>(state_of.size());
    a.matrix.assign(static_cast<std::size_t>(ns), std::vector<Integer>(static_cast<std::size_t>(ns), 0));
    for (const auto& [key, prof] : profile_of_key) {
        int u = state_of.at(key);
        for (const auto& target : prof)
            if (target) a.matrix[static_cast<std::size_t>(u)][static_cast<std::size_t>(state_of.at(*target))] += 1;
    }
    a.start = state_of.at(window_key(g, s.backend->identity_word(), window, exp_cap));

    // Validate: automaton-predicted layer counts must match the enumeration on
    // every level it saw.
    std::vector<Integer> x(static_cast<std::size_t>(ns), 0);
    x[static_cast<std::size_t>(a.start)] = 1;
    for (int n = 1; n <= depth; ++n) {
        std::vector<Integer> y(static_cast<std::size_t>(ns), 0);
        for (int u = 0; u < ns; ++u) {
            if (x[static_cast<std::size_t>(u)] == 0) continue;
            for (int v = 0; v < ns; ++v) {
                const Integer& c = a.matrix[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
                if (c != 0) y[static_cast<std::size_t>(v)] += x[static_cast<std::size_t>(u)] * c;
            }
        }
        Integer total = 0;
        for (const Integer& v : y) total += v;
        if (total != Integer(static_cast<unsigned long>(d.levels[static_cast<std::size_t>(n)].size())))
            return BuildStatus::Conflict;
        x = std::move(y);
    }

    *out = std::move(a);
    return BuildStatus::Ok;
}

// Strongly connected components (iterative Tarjan).
std::vector<std::vector<int>> scc_decompose(const std::vector<std::vector<Integer>>& m) {
    int n = static_cast<int>(m.size());
    std::vector<int> idx(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<bool> on_stack(static_cast<std::size_t>(n), false);
    std::vector<int> stack;
    std::vector<std::vector<int>> comps;
    int counter = 0;

    struct Frame {
        int v;
        int next = 0;
    };
    for (int root = 0; root < n; ++root) {
        if (idx[static_cast<std::size_t>(root)] != -1) continue;
        std::vector<Frame> frames{{root}};
        idx[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = counter++;
        stack.push_back(root);
        on_stack[static_cast<std::size_t>(root)] = true;
        while (!frames.empty()) {
            Frame& f = frames.back();
            int v = f.v;
            if (f.next < n) {
                int w = f.next++;
                if (m[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] == 0) continue;
                if (idx[static_cast<std::size_t>(w)] == -1) {
                    idx[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = counter++;
                    stack.push_back(w);
                    on_stack[static_cast<std::size_t>(w)] = true;
                    frames.push_back({w});
                } else if (on_stack[static_cast<std::size_t>(w)]) {
                    low[static_cast<std::size_t>(v)] =
                        std::min(low[static_cast<std::size_t>(v)], idx[static_cast<std::size_t>(w)]);
                }
            } else {
                if (low[static_cast<std::size_t>(v)] == idx[static_cast<std::size_t>(v)]) {
                    std::vector<int> comp;
                    while (true) {
                        int w = stack.back();
                        stack.pop_back();
                        on_stack[static_cast<std::size_t>(w)] = false;
                        comp.push_back(w);
                        if (w == v) break;
                    }
                    comps.push_back(std::move(comp));
                }
                frames.pop_back();
                if (!frames.empty()) {
                    int parent = frames.back().v;
                    low[static_cast<std::size_t>(parent)] = std::min(
                        low[static_cast<std::size_t>(parent)], low[static_cast<std::size_t>(v)]);
                }
            }
        }
    }
    return comps;
}

// Collatz-Wielandt enclosure of the Perron root of an irreducible nonnegative
// integer matrix, via power iteration on M + I (primitive, so the bounds
// converge geometrically).
RationalInterval collatz_wielandt(const std::vector<std::vector<Integer>>& m, const Rational& tol,
                                  int max_iter, bool* reached) {
    int n = static_cast<int>(m.size());
    std::vector<Integer> v(static_cast<std::size_t>(n), 1);
    Rational lo(0), hi(0);
    *reached = false;
    for (int iter = 0; iter < max_iter; ++iter) {
        std::vector<Integer> w(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                const Integer& c = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                if (c != 0) w[static_cast<std::size_t>(i)] += c * v[static_cast<std::size_t>(j)];
            }
            w[static_cast<std::size_t>(i)] += v[static_cast<std::size_t>(i)];  // the +I shift
        }
        lo = Rational(w[0], v[0]);
        hi = lo;
        for (int i = 1; i < n; ++i) {
            Rational r(w[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(i)]);
            r.canonicalize();
            if (r < lo) lo = r;
            if (r > hi) hi = r;
        }
        lo.canonicalize();
        hi.canonicalize();
        v = std::move(w);
        if (hi - lo < tol) {
            *reached = true;
            break;
        }
    }
    return RationalInterval(lo - 1, hi - 1);
}

std::optional<GrowthEstimate> fpc_perron_growth(const GeneratingSet& s,
                                                const ExactGrowthOptions& options) {
    const auto* fpc = dynamic_cast<const FreeProductCyclic*>(s.backend.get());
    if (!fpc) return std::nullopt;

    int max_syllables = 1;
    int max_exp = 1;
    for (const Word& w : s.elements) {
        max_syllables = std::max(max_syllables, FreeProductCyclic::syllable_count(w));
        for (std::size_t i = 1; i < w.size(); i += 2)
            max_exp = std::max(max_exp, std::abs(w[static_cast<std::size_t>(i)]));
    }

    Automaton a;
    bool built = false;
    for (int depth = options.bfs_depth; depth <= options.max_bfs_depth && !built; depth += 4) {
        BfsData d = run_bfs(s, depth);
        for (int window = max_syllables + 1; window <= 2 * max_syllables + 4 && !built; ++window) {
            BuildStatus st = try_build(s, d, window, max_exp * window + 1, &a);
            if (st == BuildStatus::Ok) built = true;
            if (st == BuildStatus::NeedDeeper) break;  // deepen the enumeration
        }
    }
    if (!built) return std::nullopt;

    GrowthEstimate e;
    e.provenance = GrowthProvenance::PerronEnclosure;

    std::optional<RationalInterval> best;
    bool all_reached = true;
    for (const auto& comp : scc_decompose(a.matrix)) {
        if (comp.size() == 1) {
            auto u = static_cast<std::size_t>(comp[0]);
            if (a.matrix[u][u] == 0) continue;
        }
        std::vector<std::vector<Integer>> sub(comp.size(),
                                              std::vector<Integer>(comp.size(), 0));
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (std::size_t j = 0; j < comp.size(); ++j)
                sub[i][j] = a.matrix[static_cast<std::size_t>(comp[i])]
                                    [static_cast<std::size_t>(comp[j])];
        bool reached = false;
        RationalInterval enc =
            collatz_wielandt(sub, options.tolerance, options.max_power_iterations, &reached);
        all_reached = all_reached && reached;
        // The growth rate is the largest component root; take the
        // componentwise max of the enclosures.
        if (!best) {
            best = enc;
        } else {
            if (enc.lo > best->lo) best->lo = enc.lo;
            if (enc.hi > best->hi) best->hi = enc.hi;
        }
    }

    if (!best) {
        // No recurrent state: the language is finite, so S generates a finite
        // group and the growth rate is 1.
        e.exact_value = RationalInterval::point(1);
        e.provenance = GrowthProvenance::ExactClosedForm;
        e.notes.push_back("generated subgroup is finite; growth rate 1");
        return e;
    }
    if (!all_reached)
        e.notes.push_back("power iteration hit its cap before the tolerance; "
                          "enclosure is valid but wider than requested");
    e.exact_value = *best;
    return e;
}

}  // namespace

std::optional<GrowthEstimate> exact_growth(const GeneratingSet& s,
                                           const ExactGrowthOptions& options) {
    if (!s.backend) throw std::invalid_argument("exact_growth: generating set has no backend");
    switch (s.backend->backend_kind()) {
        case BackendKind::FreeGroup: {
            const auto& g = dynamic_cast<const FreeGroup&>(*s.backend);
            // Standard symmetric generators: every generator and its inverse,
            // nothing else.
            if (s.size() != 2 * g.rank()) return std::nullopt;
            std::set<Word> have(s.elements.begin(), s.elements.end());
            for (int i = 1; i <= g.rank(); ++i) {
                if (!have.count(Word{i}) || !have.count(Word{-i})) return std::nullopt;
            }
            GrowthEstimate e;
            e.exact_value = RationalInterval::point(Rational(2 * g.rank() - 1));
            e.provenance = GrowthProvenance::ExactClosedForm;
            return e;
        }
        case BackendKind::FreeProductCyclic: {
            if (!s.symmetric) return std::nullopt;
            return fpc_perron_growth(s, options);
        }
        default:
            return std::nullopt;
    }
}

void merge_exact(GrowthEstimate& estimate, const GrowthEstimate& exact) {
    estimate.exact_value = exact.exact_value;
    estimate.provenance = exact.provenance;
    estimate.notes.insert(estimate.notes.end(), exact.notes.begin(), exact.notes.end());
}

ThetaReport theta_index(const RationalInterval& omega, int set_size) {
    if (set_size < 3)
        throw std::invalid_argument("theta_index needs |S| >= 3 (denominator |S| - 2 > 0)");
    Rational den(set_size - 2);
    ThetaReport r;
    r.value = RationalInterval((omega.lo - 1) / den, (omega.hi - 1) / den);
    r.outside_unit_interval = r.value.lo < 0 || r.value.hi > 1;
    return r;
}

}  // namespace hermcert
