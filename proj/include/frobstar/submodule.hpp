#pragma once

#include <mutex>
#include <sstream>

#include "groebner.hpp"
#include "matrix.hpp"
#include "parse.hpp"

namespace frobstar {

// Finitely generated submodule of R^rank.  Rank-1 submodules double as
// ideals.  The reduced Groebner basis is computed once on demand; the cache
// is shared across copies and its fill is race-free.
class Submodule {
public:
    Submodule() = default;

    Submodule(RingPtr ring, int rank, std::vector<PolyVec> gens)
        : ring_(std::move(ring)), rank_(rank), gens_(std::move(gens)),
          cache_(std::make_shared<Cache>()) {
        for (const auto& g : gens_) {
            if (static_cast<int>(g.size()) != rank_)
                throw rank_mismatch("generator length differs from module rank");
            for (const auto& f : g) require_same_ring(f.ring(), ring_);
        }
    }

    static Submodule zero(const RingPtr& ring, int rank) {
        return Submodule(ring, rank, {});
    }

    static Submodule full(const RingPtr& ring, int rank) {
        std::vector<PolyVec> gens;
        for (int i = 0; i < rank; ++i) {
            PolyVec e = vec_zero(ring, rank);
            e[i] = Polynomial::constant(ring, 1);
            gens.push_back(std::move(e));
        }
        return Submodule(ring, rank, std::move(gens));
    }

    const RingPtr& ring() const { return ring_; }
    int rank() const { return rank_; }
    const std::vector<PolyVec>& gens() const { return gens_; }

    ModOrder order() const { return ModOrder{ring_.get(), false}; }

    const std::vector<PolyVec>& gb() const {
        std::call_once(cache_->flag, [this] { cache_->gb = buchberger(gens_, order()); });
        return cache_->gb;
    }

    bool is_zero_module() const { return gb().empty(); }

    bool is_full_module() const {
        const auto& b = gb();
        if (static_cast<int>(b.size()) != rank_) return false;
        for (const auto& g : b) {
            int nonzero = -1;
            for (int i = 0; i < rank_; ++i)
                if (!g[i].is_zero()) {
                    if (nonzero >= 0) return false;
                    nonzero = i;
                }
            if (nonzero < 0 || !g[nonzero].is_one()) return false;
        }
        return true;
    }

private:
    struct Cache {
        std::once_flag flag;
        std::vector<PolyVec> gb;
    };

    RingPtr ring_;
    int rank_ = 0;
    std::vector<PolyVec> gens_;
    std::shared_ptr<Cache> cache_;
};

using Ideal = Submodule;  // rank-1 convention

inline Ideal make_ideal(const RingPtr& ring, const std::vector<Polynomial>& gens) {
    std::vector<PolyVec> vgens;
    for (const auto& f : gens)
        if (!f.is_zero()) vgens.push_back(PolyVec{f});
    return Submodule(ring, 1, std::move(vgens));
}

inline Ideal unit_ideal(const RingPtr& ring) {
    return make_ideal(ring, {Polynomial::constant(ring, 1)});
}

inline std::vector<Polynomial> ideal_gens(const Ideal& I) {
    std::vector<Polynomial> r;
    for (const auto& g : I.gb()) r.push_back(g[0]);
    return r;
}

inline bool is_unit_ideal(const Ideal& I) {
    const auto& b = I.gb();
    return b.size() == 1 && b[0][0].is_one();
}

// The unique remainder of v modulo the reduced GB; zero iff v is a member.
inline PolyVec normal_form(const PolyVec& v, const Submodule& M) {
    if (static_cast<int>(v.size()) != M.rank())
        throw rank_mismatch("normal_form: vector length differs from module rank");
    return reduce_full(v, M.gb(), M.order());
}

inline Polynomial normal_form(const Polynomial& f, const Ideal& I) {
    return normal_form(PolyVec{f}, I)[0];
}

inline bool contains(const Submodule& M, const PolyVec& v) {
    return vec_is_zero(normal_form(v, M));
}

inline bool contains(const Ideal& I, const Polynomial& f) {
    return normal_form(f, I).is_zero();
}

inline bool module_equal(const Submodule& A, const Submodule& B) {
    if (A.rank() != B.rank()) throw rank_mismatch("module_equal: rank mismatch");
    const auto& ga = A.gb();
    const auto& gbb = B.gb();
    if (ga.size() != gbb.size()) return false;
    for (size_t i = 0; i < ga.size(); ++i)
        if (ga[i] != gbb[i]) return false;
    return true;
}

inline bool submodule_of(const Submodule& A, const Submodule& B) {
    for (const auto& g : A.gens())
        if (!contains(B, g)) return false;
    return true;
}

// Expresses v as an R-combination of the stored generators by computing a
// Groebner basis of the graph module {(g_i, e_i)} with the generator block
// dominant; the tag block of the remainder carries the coefficients.
// The returned coefficients re-expand to v exactly (verified here).
inline std::optional<std::vector<Polynomial>> lift_membership(const PolyVec& v,
                                                              const Submodule& M) {
    const RingPtr& ring = M.ring();
    const int rank = M.rank();
    const int s = static_cast<int>(M.gens().size());
    if (static_cast<int>(v.size()) != rank)
        throw rank_mismatch("lift_membership: vector length differs from module rank");

    std::vector<PolyVec> graph;
    for (int i = 0; i < s; ++i) {
        PolyVec g = vec_zero(ring, rank + s);
        for (int j = 0; j < rank; ++j) g[j] = M.gens()[i][j];
        g[rank + i] = Polynomial::constant(ring, 1);
        graph.push_back(std::move(g));
    }
    ModOrder ord{ring.get(), false};
    auto gb = buchberger(graph, ord);

    PolyVec ext = vec_zero(ring, rank + s);
    for (int j = 0; j < rank; ++j) ext[j] = v[j];
    PolyVec rem = reduce_full(ext, gb, ord);
    for (int j = 0; j < rank; ++j)
        if (!rem[j].is_zero()) return std::nullopt;

    std::vector<Polynomial> coeffs;
    for (int i = 0; i < s; ++i) coeffs.push_back(-rem[rank + i]);

    PolyVec check = vec_zero(ring, rank);
    for (int i = 0; i < s; ++i) check = vec_add(check, vec_scale(M.gens()[i], coeffs[i]));
    if (check != v) throw std::logic_error("lift_membership: re-expansion check failed");
    return coeffs;
}

inline Submodule module_from_matrix_columns(const PolyMatrix& m) {
    std::vector<PolyVec> gens;
    for (int j = 0; j < m.cols; ++j) {
        PolyVec g;
        for (int i = 0; i < m.rows; ++i) g.push_back(m.at(i, j));
        if (!vec_is_zero(g)) gens.push_back(std::move(g));
    }
    return Submodule(m.ring(), m.rows, std::move(gens));
}

// ---- serialization -------------------------------------------------------

// `[[y,0],[z,0],[0,x],[x,y+z]]`: a list of length-rank generator vectors.
inline std::string format_submodule(const Submodule& M) {
    std::ostringstream out;
    out << "[";
    const auto& b = M.gb();
    for (size_t i = 0; i < b.size(); ++i) {
        if (i) out << ",";
        out << "[";
        for (int j = 0; j < M.rank(); ++j) {
            if (j) out << ",";
            out << format_polynomial(b[i][j]);
        }
        out << "]";
    }
    out << "]";
    return out.str();
}

// Ideals print as sorted generator lists: `(x, y+z)`, `(0)`, `(1)`.
inline std::string format_ideal(const Ideal& I) {
    const auto& b = I.gb();
    if (b.empty()) return "(0)";
    std::ostringstream out;
    out << "(";
    for (size_t i = 0; i < b.size(); ++i) {
        if (i) out << ", ";
        out << format_polynomial(b[i][0]);
    }
    out << ")";
    return out.str();
}

namespace detail {

inline std::vector<std::string> split_bracket_list(const std::string& text, int line) {
    // expects "[item,item,...]" with balanced nested brackets/parens
    size_t i = 0;
    auto skip = [&] { while (i < text.size() && std::isspace((unsigned char)text[i])) ++i; };
    skip();
    if (i >= text.size() || text[i] != '[') throw parse_error("expected '['", line, (int)i + 1);
    ++i;
    std::vector<std::string> items;
    std::string cur;
    int depth = 0;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c == '[' || c == '(') { ++depth; cur += c; }
        else if (c == ']' && depth == 0) {
            ++i;
            break;
        }
        else if (c == ']' || c == ')') { --depth; cur += c; }
        else if (c == ',' && depth == 0) { items.push_back(cur); cur.clear(); }
        else cur += c;
    }
    skip();
    if (i != text.size()) {
        // allow trailing whitespace only
        for (size_t k = i; k < text.size(); ++k)
            if (!std::isspace((unsigned char)text[k]))
                throw parse_error("unexpected text after ']'", line, (int)k + 1);
    }
    if (!cur.empty() || !items.empty()) items.push_back(cur);
    return items;
}

}  // namespace detail

inline Submodule parse_submodule(const std::string& text, const RingPtr& ring,
                                 const std::map<std::string, Polynomial>* defs = nullptr,
                                 int line = 1) {
    auto rows = detail::split_bracket_list(text, line);
    std::vector<PolyVec> gens;
    int rank = -1;
    for (const auto& row : rows) {
        auto polys = detail::split_bracket_list(row, line);
        PolyVec v;
        for (const auto& s : polys) v.push_back(parse_polynomial(s, ring, defs, line));
        if (rank < 0) rank = static_cast<int>(v.size());
        if (static_cast<int>(v.size()) != rank)
            throw parse_error("generators have inconsistent lengths", line, 1);
        gens.push_back(std::move(v));
    }
    if (rank < 0) throw parse_error("empty submodule literal needs at least one generator", line, 1);
    return Submodule(ring, rank, std::move(gens));
}

// `(x, y+z)` or `(0)` / `(1)`; returns a rank-1 ideal.
inline Ideal parse_ideal(const std::string& text, const RingPtr& ring,
                         const std::map<std::string, Polynomial>* defs = nullptr,
                         int line = 1) {
    size_t a = text.find('(');
    size_t b = text.rfind(')');
    if (a == std::string::npos || b == std::string::npos || b <= a)
        throw parse_error("expected '(gens)' ideal syntax", line, 1);
    std::string body = text.substr(a + 1, b - a - 1);
    std::vector<Polynomial> gens;
    std::string cur;
    int depth = 0;
    for (char c : body) {
        if (c == '(') { ++depth; cur += c; }
        else if (c == ')') { --depth; cur += c; }
        else if (c == ',' && depth == 0) { gens.push_back(parse_polynomial(cur, ring, defs, line)); cur.clear(); }
        else cur += c;
    }
    if (!cur.empty()) gens.push_back(parse_polynomial(cur, ring, defs, line));
    return make_ideal(ring, gens);
}

}  // namespace frobstar
