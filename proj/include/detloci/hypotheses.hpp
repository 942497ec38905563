#pragma once
#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "degree_data.hpp"
#include "dimension.hpp"
#include "hilbert.hpp"

namespace detloci {

enum class DimStatus { Exact, UpperBoundOnly, Empty };
enum class ComponentStatus { Certified, Conditional, Unknown };

inline std::string to_string(DimStatus s) {
    switch (s) {
        case DimStatus::Exact: return "Exact";
        case DimStatus::UpperBoundOnly: return "UpperBoundOnly";
        case DimStatus::Empty: return "Empty";
    }
    return "?";
}

inline std::string to_string(ComponentStatus s) {
    switch (s) {
        case ComponentStatus::Certified: return "Certified";
        case ComponentStatus::Conditional: return "Conditional";
        case ComponentStatus::Unknown: return "Unknown";
    }
    return "?";
}

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Verdict {
    bool nonempty = false;
    DimStatus dimStatus = DimStatus::UpperBoundOnly;
    std::string dimRule;
    std::optional<BigInt> dimValue;
    ComponentStatus componentStatus = ComponentStatus::Unknown;
    std::string componentRule;
    std::vector<std::string> missing;
    std::vector<Check> checks;
    std::vector<std::string> appliedRules;
    std::vector<std::string> annotations;
};

inline std::string rule_citation(const std::string& id) {
    if (id == "R1") return "R1: c=2; dim W = lambda_2, generically smooth component when n>=1";
    if (id == "R2") return "R2: c=3, n>=1, depth(2); dim W = lambda_3+K_3";
    if (id == "R3") return "R3: c=3, n=0, depth(2), (i_3); dim W = lambda_3+K_3";
    if (id == "R4") return "R4: c=4, n>=1, depth(3); dim W = lambda_4+K_3+K_4";
    if (id == "R5") return "R5: c=5, n>=1, depth(3), char 0; dim W = lambda_5+K_3+K_4+K_5";
    if (id == "R6") return "R6: c>=6, depth(3), char 0, (i_6)..(i_c); dim W = lambda_c+sum K";
    if (id == "R6a") return "R6a: c>=5, depth(3), (i_5)..(i_c); dim W = lambda_c+sum K";
    if (id == "R6b") return "R6b: c>=4, depth(2), (i_4)..(i_c); dim W = lambda_c+sum K";
    if (id == "R7") return "R7: c in {3,4}, n>=2, depth(3); generically smooth component";
    if (id == "R8")
        return "R8: (c>=5, n>=1) or (c in {3,4}, n>=2), depth(3), (j_5)..(j_c) with (j_i) "
               "waived when (j_{i-1}) holds; generically smooth component";
    if (id == "R9")
        return "R9: n>=1 and (c=3, depth(2), (j_3)) or (c=4, depth(3), (j_4)); generically smooth "
               "component";
    if (id == "R10")
        return "R10: c=5 with R5; component if depth_{I(Z_3)} D_3 >= 5 and the H^1 vanishing hold";
    return id;
}

// a_{i-min(alpha,t)} >= b_i for min(alpha,t) <= i <= t.
inline bool depth_condition(const DegreeData& d, int alpha) {
    const int m = std::min(alpha, d.t);
    for (int i = m; i <= d.t; ++i)
        if (d.aj(i - m) < d.bi(i)) return false;
    return true;
}

namespace detail {

inline Degree sum_a(const DegreeData& d, int from, int to) {
    Degree s = 0;
    for (int j = from; j <= to; ++j) s += d.aj(j);
    return s;
}

inline void check_k(const DegreeData& d, int k, const char* what) {
    if (k < 3 || k > d.c)
        throw IndexError(std::string(what) + " index must lie in 3.." + std::to_string(d.c) +
                         ", got " + std::to_string(k));
}

inline Degree condition_i_rhs(const DegreeData& d, int k) {
    return sum_a(d, d.t - 1, d.t + k - 4) - sum_a(d, 0, k - 4);
}

inline Degree condition_j_uniform_rhs(const DegreeData& d, int k) {
    return sum_a(d, d.t - 1, d.t + k - 4) - sum_a(d, 0, k - 5) - d.bi(1);
}

inline Degree condition_j_rhs(const DegreeData& d, int k) {
    if (k == 3) return d.aj(d.t - 1) + d.aj(d.t) - d.bi(1);
    if (k == 4) return d.aj(d.t - 1) + d.aj(d.t) - d.bi(1);
    return condition_j_uniform_rhs(d, k);
}

}  // namespace detail

inline bool condition_i(const DegreeData& d, int k) {
    detail::check_k(d, k, "condition_i");
    return d.aj(d.t + k - 2) > detail::condition_i_rhs(d, k);
}

inline bool condition_j(const DegreeData& d, int k) {
    detail::check_k(d, k, "condition_j");
    return d.aj(d.t + k - 2) > detail::condition_j_rhs(d, k);
}

// Lower bound (N+1)deg + (N-3)(1-g) for Hilbert scheme components containing smooth curves.
inline std::optional<BigInt> curve_component_bound(const DegreeData& d) {
    if (d.n != 1 || !is_nonempty(d)) return std::nullopt;
    HilbertSummary h = hilbert_polynomial(d);
    if (!h.genus) return std::nullopt;
    const int N = d.N();
    return BigInt(N + 1) * h.degreeOfScheme + BigInt(N - 3) * (1 - *h.genus);
}

inline Verdict classify(const DegreeData& d) {
    Verdict v;
    v.nonempty = is_nonempty(d);
    {
        std::string det;
        for (int i = 1; i <= d.t; ++i)
            det += (i > 1 ? ", " : "") + std::string("a_") + std::to_string(i - 1) + "-b_" +
                   std::to_string(i) + "=" + std::to_string(d.aj(i - 1) - d.bi(i));
        v.checks.push_back({"nonempty", v.nonempty, det});
    }
    if (!v.nonempty) {
        v.dimStatus = DimStatus::Empty;
        return v;
    }

    const bool dep2 = depth_condition(d, 2);
    const bool dep3 = depth_condition(d, 3);
    v.checks.push_back({"depth(2)", dep2, "a_{i-min(2,t)} >= b_i for min(2,t) <= i <= t"});
    v.checks.push_back({"depth(3)", dep3, "a_{i-min(3,t)} >= b_i for min(3,t) <= i <= t"});
    v.checks.push_back({"char0", d.charK == 0, "char = " + std::to_string(d.charK)});

    std::vector<bool> ci(static_cast<std::size_t>(d.c + 1), false);
    std::vector<bool> cj(static_cast<std::size_t>(d.c + 1), false);
    for (int k = 3; k <= d.c; ++k) {
        ci[k] = condition_i(d, k);
        v.checks.push_back({"i_" + std::to_string(k), ci[k],
                            "a_" + std::to_string(d.t + k - 2) + "=" +
                                std::to_string(d.aj(d.t + k - 2)) + " > " +
                                std::to_string(detail::condition_i_rhs(d, k))});
    }
    for (int k = 3; k <= d.c; ++k) {
        cj[k] = condition_j(d, k);
        std::string det = "a_" + std::to_string(d.t + k - 2) + "=" +
                          std::to_string(d.aj(d.t + k - 2)) + " > " +
                          std::to_string(detail::condition_j_rhs(d, k));
        if (k <= 4)
            det += " (special form a_{t-1}+a_t-b_1; the uniform formula would give " +
                   std::to_string(detail::condition_j_uniform_rhs(d, k)) + ")";
        v.checks.push_back({"j_" + std::to_string(k), cj[k], det});
    }
    auto all_i = [&](int from) {
        for (int k = from; k <= d.c; ++k)
            if (!ci[k]) return false;
        return true;
    };
    const bool char0 = d.charK == 0;
    const int c = d.c, n = d.n;

    std::vector<std::pair<std::string, bool>> dimRules = {
        {"R1", c == 2},
        {"R2", c == 3 && n >= 1 && dep2},
        {"R3", c == 3 && n == 0 && dep2 && ci[3]},
        {"R4", c == 4 && n >= 1 && dep3},
        {"R5", c == 5 && n >= 1 && dep3 && char0},
        {"R6", c >= 6 && dep3 && char0 && all_i(6)},
        {"R6a", c >= 5 && dep3 && all_i(5)},
        {"R6b", c >= 4 && dep2 && all_i(4)},
    };

    bool r8 = false;
    if (((c >= 5 && n >= 1) || ((c == 3 || c == 4) && n >= 2)) && dep3) {
        r8 = true;
        for (int k = 5; k <= c; ++k) {
            const bool waived = k >= 6 && cj[k - 1];
            if (!cj[k] && !waived) r8 = false;
        }
    }
    std::vector<std::pair<std::string, bool>> compRules = {
        {"R1", c == 2 && n >= 1},
        {"R7", (c == 3 || c == 4) && n >= 2 && dep3},
        {"R8", r8},
        {"R9", n >= 1 && ((c == 3 && dep2 && cj[3]) || (c == 4 && dep3 && cj[4]))},
    };

    for (auto& [id, ok] : dimRules) {
        if (!ok) continue;
        v.appliedRules.push_back(rule_citation(id));
        if (v.dimStatus != DimStatus::Exact) {
            v.dimStatus = DimStatus::Exact;
            v.dimRule = id;
        }
    }
    for (auto& [id, ok] : compRules) {
        if (!ok) continue;
        if (id != "R1") v.appliedRules.push_back(rule_citation(id));
        if (v.componentStatus != ComponentStatus::Certified) {
            v.componentStatus = ComponentStatus::Certified;
            v.componentRule = id;
        }
    }
    const bool r5 = dimRules[4].second;
    if (v.componentStatus != ComponentStatus::Certified && c == 5 && r5) {
        v.componentStatus = ComponentStatus::Conditional;
        v.componentRule = "R10";
        v.missing = {"depth_{I(Z_3)} D_3 >= 5", "H^1 vanishing on the open complement"};
        v.appliedRules.push_back(rule_citation("R10"));
    }
    if (v.componentStatus == ComponentStatus::Certified && v.dimStatus != DimStatus::Exact) {
        v.dimStatus = DimStatus::Exact;
        v.dimRule = v.componentRule;
    }

    DimensionReport rep = dimension_report(d);
    v.dimValue = rep.dimW_viaK;

    if (auto bound = curve_component_bound(d); bound && *bound > rep.dimW_viaK) {
        v.annotations.push_back(
            "components of the Hilbert scheme containing smooth connected curves of this degree "
            "and genus have dimension >= (N+1)deg+(N-3)(1-g) = " +
            to_string(*bound) + " > dim W = " + to_string(rep.dimW_viaK) +
            ", so W is not a component when its general member is smooth");
    }
    return v;
}

}  // namespace detloci
