#pragma once
#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "degree_data.hpp"
#include "dimension.hpp"
#include "hypotheses.hpp"

namespace detloci {

struct IntRange {
    int lo = 0;
    int hi = 0;
};

struct ScanRange {
    enum class Mode { EqualDegree, Full };
    IntRange t{1, 1};
    IntRange c{2, 2};
    IntRange n{0, 0};
    Degree degreeBox = 1;
    Mode mode = Mode::EqualDegree;
    int charK = 0;
};

inline constexpr const char* kScanHeader =
    "t,c,n,char,b,a,empty,ell,lambda,sumK,dimW,conjecture,match,dim_status,dim_rule,"
    "component_status,component_rule";

inline void validate_range(const ScanRange& r) {
    auto bad = [](const IntRange& x) { return x.lo > x.hi; };
    if (bad(r.t) || bad(r.c) || bad(r.n)) throw InputError("scan ranges must be nonempty");
    if (r.t.lo < 1) throw InputError("t must be at least 1");
    if (r.c.lo < 2) throw SizeError("c must be at least 2");
    if (r.n.lo < 0) throw InputError("n must be nonnegative");
    if (r.degreeBox < (r.mode == ScanRange::Mode::EqualDegree ? 1 : 0))
        throw InputError("degree box too small");
    if (r.charK != 0 && !is_prime(r.charK)) throw CharError("characteristic must be 0 or a prime");
}

// Instances in output order: t, c, n, then degrees.
inline std::vector<DegreeData> scan_instances(const ScanRange& r) {
    validate_range(r);
    std::vector<DegreeData> out;
    for (int t = r.t.lo; t <= r.t.hi; ++t)
        for (int c = r.c.lo; c <= r.c.hi; ++c)
            for (int n = r.n.lo; n <= r.n.hi; ++n) {
                if (r.mode == ScanRange::Mode::EqualDegree) {
                    for (Degree dd = 1; dd <= r.degreeBox; ++dd)
                        out.push_back(validate(std::vector<Degree>(static_cast<std::size_t>(t), 0),
                                               std::vector<Degree>(static_cast<std::size_t>(t + c - 1), dd),
                                               n, r.charK));
                    continue;
                }
                const int box = static_cast<int>(r.degreeBox);
                for_each_multiset(box + 1, t, [&](const std::vector<int>& bs) {
                    for_each_multiset(box + 1, t + c - 1, [&](const std::vector<int>& as) {
                        out.push_back(validate(std::vector<Degree>(bs.begin(), bs.end()),
                                               std::vector<Degree>(as.begin(), as.end()), n,
                                               r.charK));
                    });
                });
            }
    return out;
}

inline std::string join_degrees(const std::vector<Degree>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

inline std::string scan_row(const DegreeData& d, bool equalDegree) {
    std::ostringstream os;
    os << d.t << ',' << d.c << ',' << d.n << ',' << d.charK << ',' << join_degrees(d.b) << ','
       << join_degrees(d.a) << ',';
    const Verdict v = classify(d);
    if (!v.nonempty) {
        os << "1,,,,,,,Empty,,Unknown,";
        return os.str();
    }
    const DimensionReport r = dimension_report(d);
    os << "0," << r.ell << ',' << r.lambdaC.get_str() << ',' << r.sumK().get_str() << ','
       << r.dimW_viaK.get_str() << ',';
    if (equalDegree) {
        const BigInt conj = equal_degree_dimension(d.t, d.c, d.a[0] - d.b[0], d.n);
        os << conj.get_str() << ',' << (conj == r.dimW_viaK ? 1 : 0) << ',';
    } else {
        os << ",,";
    }
    os << to_string(v.dimStatus) << ',' << v.dimRule << ',' << to_string(v.componentStatus) << ','
       << v.componentRule;
    return os.str();
}

inline unsigned scan_threads() {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("DETLOCI_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
    }
    return n;
}

// Writes the header and one row per instance; returns the row count.
inline std::size_t run_scan(const ScanRange& r, std::ostream& out, unsigned threads = scan_threads()) {
    const auto inst = scan_instances(r);
    const bool eq = r.mode == ScanRange::Mode::EqualDegree;
    std::vector<std::string> rows(inst.size());
    std::vector<std::exception_ptr> errors(inst.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < inst.size(); i = next++) {
            try {
                rows[i] = scan_row(inst[i], eq);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(inst.size())));
    std::vector<std::thread> pool;
    for (unsigned k = 1; k < threads; ++k) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    out << kScanHeader << '\n';
    for (const auto& row : rows) out << row << '\n';
    return rows.size();
}

}  // namespace detloci
