#pragma once
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "degree_data.hpp"
#include "errors.hpp"
#include "poly.hpp"

namespace detloci {

enum class LemmaVariant { Standard, Good };

// Entries in canonical order: row i-1 holds b_i, column j holds a_j.
struct PolyMatrix {
    int t = 0;
    int columns = 0;
    int nvars = 0;
    Coeff p = 32003;
    std::uint64_t seed = 0;
    std::vector<std::vector<SparsePoly>> entries;
    // Display order lists rows by descending b and columns by descending a:
    // displayRows[k] is the canonical row shown in display row k.
    std::vector<int> displayRows;
    std::vector<int> displayColumns;

    const SparsePoly& at(int row, int col) const {
        return entries.at(static_cast<std::size_t>(row)).at(static_cast<std::size_t>(col));
    }
    const SparsePoly& display_at(int row, int col) const {
        return at(displayRows.at(static_cast<std::size_t>(row)),
                  displayColumns.at(static_cast<std::size_t>(col)));
    }
};

namespace detail {

inline PolyMatrix empty_matrix(const DegreeData& d, Coeff p, std::uint64_t seed) {
    PolyMatrix m;
    m.t = d.t;
    m.columns = d.columns();
    m.nvars = d.N() + 1;
    m.p = p;
    m.seed = seed;
    m.entries.assign(static_cast<std::size_t>(d.t),
                     std::vector<SparsePoly>(static_cast<std::size_t>(m.columns),
                                             SparsePoly(m.nvars, p)));
    for (int k = 0; k < d.t; ++k) m.displayRows.push_back(d.t - 1 - k);
    for (int k = 0; k < m.columns; ++k) m.displayColumns.push_back(m.columns - 1 - k);
    return m;
}

inline SparsePoly pure_power(int nvars, Coeff p, int var, Degree e) {
    Exponents x(static_cast<std::size_t>(nvars), 0);
    x[static_cast<std::size_t>(var)] = static_cast<int>(e);
    return SparsePoly::monomial(nvars, p, x);
}

}  // namespace detail

// Banded monomial witness: x_m^{a_j-b_i} with m = i+c-2-j on the band i-1 <= j <= i+c-2;
// the good variant adds x_c^{a_{i+c-1}-b_i} just right of the band for i < t.
inline PolyMatrix lemma_matrix(const DegreeData& d, LemmaVariant variant, Coeff p = 32003) {
    if (!is_nonempty(d)) throw EmptyError("W(b;a) is empty for this degree data");
    if (variant == LemmaVariant::Good && d.N() < d.c)
        throw VariableError("good variant needs the variable x_c, but N < c");
    PolyMatrix m = detail::empty_matrix(d, p, 0);
    for (int i = 1; i <= d.t; ++i) {
        for (int j = i - 1; j <= i + d.c - 2; ++j)
            m.entries[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] =
                detail::pure_power(m.nvars, p, i + d.c - 2 - j, d.aj(j) - d.bi(i));
        if (variant == LemmaVariant::Good && i < d.t) {
            const int j = i + d.c - 1;
            m.entries[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] =
                detail::pure_power(m.nvars, p, d.c, d.aj(j) - d.bi(i));
        }
    }
    return m;
}

// Dense random forms of degree u_ji, from mt19937_64(seed) in row, column, monomial order.
inline PolyMatrix generic_matrix(const DegreeData& d, Coeff p, std::uint64_t seed,
                                 bool minimality = true) {
    if (!is_nonempty(d)) throw EmptyError("W(b;a) is empty for this degree data");
    if (p < 101 || !is_prime(p) || p > 65521)
        throw InputError("prime must lie in 101..65521, got " + std::to_string(p));
    PolyMatrix m = detail::empty_matrix(d, p, seed);
    std::mt19937_64 rng(seed);
    for (int i = 1; i <= d.t; ++i)
        for (int j = 0; j < d.columns(); ++j) {
            const Degree u = d.aj(j) - d.bi(i);
            if (u < 0 || (u == 0 && minimality)) continue;
            SparsePoly f(m.nvars, p);
            for (const auto& e : monomials(m.nvars, static_cast<int>(u))) f.add_term(e, rng() % p);
            m.entries[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] = std::move(f);
        }
    return m;
}

inline std::string matrix_to_text(const PolyMatrix& m) {
    std::ostringstream os;
    os << "# t=" << m.t << " columns=" << m.columns << " nvars=" << m.nvars << " p=" << m.p
       << " seed=" << m.seed << "\n";
    for (int i = 0; i < m.t; ++i)
        for (int j = 0; j < m.columns; ++j)
            os << (i + 1) << " " << j << " : " << m.at(i, j).to_string() << "\n";
    return os.str();
}

// Inverse of matrix_to_text.
inline PolyMatrix matrix_from_text(const std::string& text) {
    PolyMatrix m;
    std::istringstream is(text);
    std::string line;
    bool header = false;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream hs(line.substr(1));
            std::string tok;
            while (hs >> tok) {
                const auto eq = tok.find('=');
                if (eq == std::string::npos) continue;
                const std::string key = tok.substr(0, eq);
                const std::string val = tok.substr(eq + 1);
                if (key == "t") m.t = std::stoi(val);
                else if (key == "columns") m.columns = std::stoi(val);
                else if (key == "nvars") m.nvars = std::stoi(val);
                else if (key == "p") m.p = static_cast<Coeff>(std::stoul(val));
                else if (key == "seed") m.seed = std::stoull(val);
            }
            m.entries.assign(static_cast<std::size_t>(m.t),
                             std::vector<SparsePoly>(static_cast<std::size_t>(m.columns),
                                                     SparsePoly(m.nvars, m.p)));
            m.displayRows.clear();
            m.displayColumns.clear();
            for (int k = 0; k < m.t; ++k) m.displayRows.push_back(m.t - 1 - k);
            for (int k = 0; k < m.columns; ++k) m.displayColumns.push_back(m.columns - 1 - k);
            header = true;
            continue;
        }
        if (!header) throw InputError("matrix text is missing its header line");
        std::istringstream ls(line);
        int i = 0, j = 0;
        std::string colon;
        if (!(ls >> i >> j >> colon) || colon != ":" || i < 1 || i > m.t || j < 0 ||
            j >= m.columns)
            throw InputError("bad matrix entry line: " + line);
        SparsePoly f(m.nvars, m.p);
        std::string tok;
        while (ls >> tok) {
            if (tok == "+" || tok == "0") continue;
            const std::uint64_t c = std::stoull(tok);
            std::string mono;
            if (!(ls >> mono)) throw InputError("term without monomial: " + line);
            Exponents e(static_cast<std::size_t>(m.nvars), 0);
            std::size_t pos = 0;
            for (int v = 0; v < m.nvars; ++v) {
                const std::string tag = "x" + std::to_string(v) + "^";
                if (mono.compare(pos, tag.size(), tag) != 0) throw InputError("bad monomial: " + mono);
                pos += tag.size();
                std::size_t used = 0;
                e[static_cast<std::size_t>(v)] = std::stoi(mono.substr(pos), &used);
                pos += used;
            }
            f.add_term(e, c);
        }
        m.entries[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] = std::move(f);
    }
    if (!header) throw InputError("empty matrix text");
    return m;
}

}  // namespace detloci
