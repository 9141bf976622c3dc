#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dirichlet/families.hpp"
#include "dirichlet/graph.hpp"
#include "dirichlet/parallel.hpp"
#include "dirichlet/sigma.hpp"
#include "dirichlet/spectral.hpp"
#include "dirichlet/tree_code.hpp"

namespace dirichlet {

inline constexpr double kTieTol = 1e-9;
inline constexpr std::size_t kMaxInteriorTreeOrder = 12;

/// Desk-scale guard for boundary-tree enumeration.
struct EnumerationLimits {
    std::size_t max_k = 8;
    std::size_t max_b = 20;
    bool override_limits = false;
};

/// Free trees on k vertices, one per isomorphism class, sorted by TreeCode.
///
/// Grown one leaf at a time from the trees on k − 1 vertices; every tree on
/// k vertices arises this way by deleting any of its leaves.
inline std::vector<Graph> enumerate_interior_trees(std::size_t k) {
    if (k < 1) throw Error(Errc::ParamOutOfRange, "need k >= 1");
    if (k > kMaxInteriorTreeOrder) {
        throw Error(Errc::TooLarge, "interior trees limited to k <= " + std::to_string(kMaxInteriorTreeOrder));
    }
    std::vector<Graph> level{Graph(1, std::vector<Edge>{})};
    for (std::size_t n = 2; n <= k; ++n) {
        std::map<TreeCode, Graph> seen;
        for (const Graph& t : level) {
            auto base = t.edges();
            for (VertexId v = 0; v < t.order(); ++v) {
                std::vector<Edge> edges(base.begin(), base.end());
                edges.emplace_back(v, n - 1);
                Graph grown(n, edges);
                auto code = tree_code(grown);
                seen.try_emplace(std::move(code), std::move(grown));
            }
        }
        level.clear();
        for (auto& [code, g] : seen) level.push_back(std::move(g));
    }
    return level;
}

struct BoundaryTreeClass {
    TreeCode code;
    BoundaryGraph tree;
};

/// Trees with exactly k non-leaf vertices and b leaves, boundary = leaves,
/// one per isomorphism class, sorted by TreeCode.
///
/// For each interior tree, every way of hanging b leaves on its vertices so
/// that each vertex ends with degree ≥ 2 is built; duplicates are removed by
/// the code of the whole tree. Interior ids are 0..k−1 in every result.
inline std::vector<BoundaryTreeClass> enumerate_boundary_trees(std::size_t k, std::size_t b,
                                                               EnumerationLimits lim = {}) {
    if (k < 1) throw Error(Errc::ParamOutOfRange, "need k >= 1");
    if (!lim.override_limits && (k > lim.max_k || b > lim.max_b)) {
        throw Error(Errc::TooLarge, "k=" + std::to_string(k) + ", b=" + std::to_string(b) +
                                        " exceeds desk limits k <= " + std::to_string(lim.max_k) +
                                        ", b <= " + std::to_string(lim.max_b));
    }
    if (b < 2) throw Error(Errc::Infeasible, "a tree with interior vertices has at least 2 leaves");

    std::map<TreeCode, BoundaryGraph> seen;
    for (const Graph& t : enumerate_interior_trees(k)) {
        std::vector<std::size_t> need(k);
        std::size_t need_total = 0;
        for (VertexId v = 0; v < k; ++v) {
            need[v] = t.degree(v) >= 2 ? 0 : 2 - t.degree(v);
            need_total += need[v];
        }
        if (need_total > b) continue;

        auto base = t.edges();
        std::vector<std::size_t> extra(k, 0);
        // Distribute the b − need_total free leaves over the k vertices.
        auto emit = [&] {
            std::vector<Edge> edges(base.begin(), base.end());
            VertexId next = k;
            for (VertexId v = 0; v < k; ++v) {
                for (std::size_t i = 0; i < need[v] + extra[v]; ++i) edges.emplace_back(v, next++);
            }
            Graph g(k + b, edges);
            auto code = tree_code(g);
            if (!seen.count(code)) seen.emplace(std::move(code), tree_with_leaf_boundary(std::move(g)));
        };
        auto place = [&](auto&& self, std::size_t v, std::size_t left) -> void {
            if (v + 1 == k) {
                extra[v] = left;
                emit();
                return;
            }
            for (std::size_t x = 0; x <= left; ++x) {
                extra[v] = x;
                self(self, v + 1, left - x);
            }
        };
        place(place, 0, b - need_total);
    }
    if (seen.empty()) {
        throw Error(Errc::Infeasible, "no tree with k=" + std::to_string(k) + " and b=" + std::to_string(b));
    }
    std::vector<BoundaryTreeClass> out;
    out.reserve(seen.size());
    for (auto& [code, bg] : seen) out.push_back({code, std::move(bg)});
    return out;
}

struct SearchResult {
    std::size_t k = 0;
    std::size_t b = 0;
    double max_lambda1 = 0.0;
    std::vector<TreeCode> argmax;
    std::vector<BoundaryGraph> argmax_trees;
    /// λ1 of each argmax class, same order as argmax.
    std::vector<double> argmax_lambda1;
    std::size_t total_enumerated = 0;
    /// Largest λ1 outside the argmax set, if any.
    std::optional<double> runner_up;
};

struct SearchOptions {
    EnumerationLimits limits{};
    std::size_t jobs = 1;
    JacobiOptions solver{};
    double tie_tol = kTieTol;
};

/// λ1 of every class with k interior vertices and b leaves, reduced to the
/// maximum and the classes within tie_tol of it.
inline SearchResult max_lambda1(std::size_t k, std::size_t b, SearchOptions opts = {}) {
    auto classes = enumerate_boundary_trees(k, b, opts.limits);
    std::vector<double> lam(classes.size());
    parallel_for(classes.size(), opts.jobs,
                 [&](std::size_t i) { lam[i] = lambda1(classes[i].tree, opts.solver).lambda1; });

    SearchResult res;
    res.k = k;
    res.b = b;
    res.total_enumerated = classes.size();
    res.max_lambda1 = *std::max_element(lam.begin(), lam.end());
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (lam[i] >= res.max_lambda1 - opts.tie_tol) {
            res.argmax.push_back(classes[i].code);
            res.argmax_trees.push_back(classes[i].tree);
            res.argmax_lambda1.push_back(lam[i]);
        } else if (!res.runner_up || lam[i] > *res.runner_up) {
            res.runner_up = lam[i];
        }
    }
    return res;
}

/// Leaf counts b = ak + 1, ak + k − 1 and ak + 2.
enum class LeafCase { AkPlus1, AkPlusKMinus1, AkPlus2 };

inline std::string to_string(LeafCase c) {
    switch (c) {
    case LeafCase::AkPlus1: return "ak+1";
    case LeafCase::AkPlusKMinus1: return "ak+k-1";
    case LeafCase::AkPlus2: return "ak+2";
    }
    return "unknown";
}

inline std::optional<LeafCase> parse_leaf_case(const std::string& s) {
    if (s == "ak+1") return LeafCase::AkPlus1;
    if (s == "ak+k-1") return LeafCase::AkPlusKMinus1;
    if (s == "ak+2") return LeafCase::AkPlus2;
    return std::nullopt;
}

struct CaseCheck {
    LeafCase leaf_case = LeafCase::AkPlus1;
    std::size_t b = 0;
    bool applicable = false;
    std::string note;
    std::vector<SlpShape> predicted_shapes;
    std::vector<TreeCode> predicted;
    double predicted_lambda1 = 0.0;
    std::optional<SearchResult> result;
    bool value_ok = false;
    bool argmax_ok = false;

    [[nodiscard]] bool passed() const { return !applicable || (value_ok && argmax_ok); }
};

struct ExtremalReport {
    long a = 0;
    long k = 0;
    std::vector<CaseCheck> checks;

    [[nodiscard]] bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const CaseCheck& c) { return c.passed(); });
    }
};

/// Predicted extremal shapes for (a, k) and a leaf case. Empty when no
/// closed form covers the case. For k = 3, ak + 2 coincides with ak + k − 1.
inline std::vector<SlpShape> predicted_shapes(LeafCase c, long a, long k, std::string* note = nullptr) {
    auto say = [&](const std::string& s) {
        if (note) *note = s;
    };
    switch (c) {
    case LeafCase::AkPlus1:
        if (a >= 1 && k >= 2) return {SlpShape::Sigma1};
        say("needs a >= 1 and k >= 2");
        return {};
    case LeafCase::AkPlusKMinus1:
        if (k >= 2 && a * k + k - 1 >= 2) return {SlpShape::Sigma2};
        say("needs k >= 2 and at least 2 leaves");
        return {};
    case LeafCase::AkPlus2:
        if (a < 1) {
            say("needs a >= 1");
            return {};
        }
        if (k == 3) {
            say("b = 3a+2 = ak+k-1, checked against sigma2");
            return {SlpShape::Sigma2};
        }
        if (k >= 4 && k % 2 == 0) return {SlpShape::Sigma3Path1, SlpShape::Sigma3Path2, SlpShape::Sigma3Path3};
        if (k >= 5) return {SlpShape::Sigma4};
        say("no closed form for k = " + std::to_string(k));
        return {};
    }
    return {};
}

inline std::size_t leaf_count(LeafCase c, long a, long k) {
    switch (c) {
    case LeafCase::AkPlus1: return static_cast<std::size_t>(a * k + 1);
    case LeafCase::AkPlusKMinus1: return static_cast<std::size_t>(a * k + k - 1);
    case LeafCase::AkPlus2: return static_cast<std::size_t>(a * k + 2);
    }
    return 0;
}

/// Exhaustive check of one leaf case: the maximum over the class must match
/// the closed form to 1e-9 and the argmax set must be exactly the predicted
/// shapes up to isomorphism.
inline CaseCheck check_leaf_case(LeafCase c, long a, long k, SearchOptions opts = {}) {
    if (a < 0 || k < 1) throw Error(Errc::ParamOutOfRange, "need a >= 0 and k >= 1");
    CaseCheck chk;
    chk.leaf_case = c;
    chk.b = leaf_count(c, a, k);
    chk.predicted_shapes = predicted_shapes(c, a, k, &chk.note);
    if (chk.predicted_shapes.empty()) return chk;
    chk.applicable = true;

    std::set<TreeCode> want;
    for (SlpShape s : chk.predicted_shapes) {
        // ak+2 with k = 3 reuses sigma2 at the same b.
        auto w = slp_eigenfunction(s, a, k);
        chk.predicted_lambda1 = w.sigma;
        want.insert(tree_code(w.tree.graph()));
    }
    chk.predicted.assign(want.begin(), want.end());

    chk.result = max_lambda1(static_cast<std::size_t>(k), chk.b, opts);
    chk.value_ok = std::abs(chk.result->max_lambda1 - chk.predicted_lambda1) <= opts.tie_tol;
    std::set<TreeCode> got(chk.result->argmax.begin(), chk.result->argmax.end());
    chk.argmax_ok = got == want;
    return chk;
}

/// Runs every applicable leaf case for (a, k), or only `only` when given.
inline ExtremalReport verify_extremal_theorems(long a, long k, std::optional<LeafCase> only = std::nullopt,
                                               SearchOptions opts = {}) {
    ExtremalReport rep;
    rep.a = a;
    rep.k = k;
    for (LeafCase c : {LeafCase::AkPlus1, LeafCase::AkPlusKMinus1, LeafCase::AkPlus2}) {
        if (only && *only != c) continue;
        rep.checks.push_back(check_leaf_case(c, a, k, opts));
    }
    return rep;
}

/// Throws Mismatch naming the first failing case.
inline void require_passed(const ExtremalReport& rep) {
    for (const auto& c : rep.checks) {
        if (c.passed()) continue;
        std::string msg = "a=" + std::to_string(rep.a) + ", k=" + std::to_string(rep.k) + ", b=" +
                          std::to_string(c.b) + " (" + to_string(c.leaf_case) + "): ";
        if (!c.value_ok) {
            msg += "max lambda1 " + std::to_string(c.result->max_lambda1) + " vs predicted " +
                   std::to_string(c.predicted_lambda1);
        } else {
            msg += "argmax has " + std::to_string(c.result->argmax.size()) + " classes, predicted " +
                   std::to_string(c.predicted.size());
        }
        throw Error(Errc::Mismatch, msg);
    }
}

} // namespace dirichlet
