#include "blg/category.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "blg/planarity.hpp"

namespace blg {

GeneratorExpression expr_leaf(GeneratorExpression::Kind kind) {
    GeneratorExpression e;
    e.kind = kind;
    switch (kind) {
        case GeneratorExpression::M10: e.l = 1; e.k = 0; break;
        case GeneratorExpression::M12: e.l = 1; e.k = 2; break;
        case GeneratorExpression::A: e.l = 1; e.k = 1; break;
        case GeneratorExpression::S: e.l = 2; e.k = 2; break;
        default: throw std::invalid_argument("expr_leaf: not a leaf kind");
    }
    return e;
}

GeneratorExpression expr_compose(GeneratorExpression a, GeneratorExpression b) {
    if (a.k != b.l) throw std::invalid_argument("expression compose: arity mismatch");
    GeneratorExpression e;
    e.kind = GeneratorExpression::Compose;
    e.l = a.l;
    e.k = b.k;
    e.children.push_back(std::move(a));
    e.children.push_back(std::move(b));
    return e;
}

GeneratorExpression expr_tensor(GeneratorExpression a, GeneratorExpression b) {
    GeneratorExpression e;
    e.kind = GeneratorExpression::Tensor;
    e.l = a.l + b.l;
    e.k = a.k + b.k;
    e.children.push_back(std::move(a));
    e.children.push_back(std::move(b));
    return e;
}

GeneratorExpression expr_transpose(GeneratorExpression a) {
    GeneratorExpression e;
    e.kind = GeneratorExpression::Transpose;
    e.l = a.k;
    e.k = a.l;
    e.children.push_back(std::move(a));
    return e;
}

BiLabeledGraph eval_blg(const GeneratorExpression& e) {
    switch (e.kind) {
        case GeneratorExpression::M10: return gen_M(1, 0);
        case GeneratorExpression::M12: return gen_M(1, 2);
        case GeneratorExpression::A: return gen_A();
        case GeneratorExpression::S: return gen_S();
        case GeneratorExpression::Compose:
            return compose(eval_blg(e.children[0]), eval_blg(e.children[1]));
        case GeneratorExpression::Tensor:
            return tensor(eval_blg(e.children[0]), eval_blg(e.children[1]));
        case GeneratorExpression::Transpose: return transpose(eval_blg(e.children[0]));
    }
    throw std::logic_error("eval_blg: bad kind");
}

namespace {

// The generator matrices are very sparse and deep expressions can pass
// through wide intermediate arities, so evaluation stays sparse throughout.
struct SparseMat {
    int n = 0;
    int l = 0;
    int k = 0;
    std::map<std::pair<long long, long long>, BigInt> nz;  // keyed (row, col)

    long long rows() const { return ipow(n, l); }
    long long cols() const { return ipow(n, k); }
};

SparseMat sparse_eval(const GeneratorExpression& e, const Graph& g) {
    int n = g.n();
    switch (e.kind) {
        case GeneratorExpression::M10: {
            SparseMat m{n, 1, 0, {}};
            for (int u = 0; u < n; ++u) m.nz[{u, 0}] = 1;
            return m;
        }
        case GeneratorExpression::M12: {
            SparseMat m{n, 1, 2, {}};
            for (int u = 0; u < n; ++u) m.nz[{u, static_cast<long long>(u) * n + u}] = 1;
            return m;
        }
        case GeneratorExpression::A: {
            SparseMat m{n, 1, 1, {}};
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v)
                    if (g.has_edge(u, v)) m.nz[{u, v}] = 1;
            return m;
        }
        case GeneratorExpression::S: {
            SparseMat m{n, 2, 2, {}};
            for (int u1 = 0; u1 < n; ++u1)
                for (int u2 = 0; u2 < n; ++u2)
                    m.nz[{static_cast<long long>(u1) * n + u2,
                          static_cast<long long>(u2) * n + u1}] = 1;
            return m;
        }
        case GeneratorExpression::Compose: {
            SparseMat a = sparse_eval(e.children[0], g);
            SparseMat b = sparse_eval(e.children[1], g);
            std::map<long long, std::vector<std::pair<long long, const BigInt*>>> b_rows;
            for (const auto& [rc, val] : b.nz) b_rows[rc.first].push_back({rc.second, &val});
            SparseMat c{n, a.l, b.k, {}};
            for (const auto& [rc, val] : a.nz) {
                auto it = b_rows.find(rc.second);
                if (it == b_rows.end()) continue;
                for (const auto& [col, bval] : it->second) c.nz[{rc.first, col}] += val * *bval;
            }
            return c;
        }
        case GeneratorExpression::Tensor: {
            SparseMat a = sparse_eval(e.children[0], g);
            SparseMat b = sparse_eval(e.children[1], g);
            SparseMat c{n, a.l + b.l, a.k + b.k, {}};
            for (const auto& [rc1, v1] : a.nz)
                for (const auto& [rc2, v2] : b.nz)
                    c.nz[{rc1.first * b.rows() + rc2.first, rc1.second * b.cols() + rc2.second}] =
                        v1 * v2;
            return c;
        }
        case GeneratorExpression::Transpose: {
            SparseMat a = sparse_eval(e.children[0], g);
            SparseMat c{n, a.k, a.l, {}};
            for (const auto& [rc, val] : a.nz) c.nz[{rc.second, rc.first}] = val;
            return c;
        }
    }
    throw std::logic_error("eval_matrix: bad kind");
}

}  // namespace

HomMatrix eval_matrix(const GeneratorExpression& e, const Graph& g) {
    SparseMat s = sparse_eval(e, g);
    HomMatrix m(g.n(), e.l, e.k);
    for (const auto& [rc, val] : s.nz) m.at(rc.first, rc.second) = val;
    return m;
}

std::string format_expression(const GeneratorExpression& e) {
    switch (e.kind) {
        case GeneratorExpression::M10: return "M10";
        case GeneratorExpression::M12: return "M12";
        case GeneratorExpression::A: return "A";
        case GeneratorExpression::S: return "S";
        case GeneratorExpression::Compose:
            return "(" + format_expression(e.children[0]) + " o " +
                   format_expression(e.children[1]) + ")";
        case GeneratorExpression::Tensor:
            return "(" + format_expression(e.children[0]) + " x " +
                   format_expression(e.children[1]) + ")";
        case GeneratorExpression::Transpose:
            return "t(" + format_expression(e.children[0]) + ")";
    }
    throw std::logic_error("format_expression: bad kind");
}

namespace {

struct Parser {
    std::vector<std::string> tokens;
    size_t pos = 0;

    explicit Parser(const std::string& text) {
        size_t i = 0;
        while (i < text.size()) {
            char ch = text[i];
            if (isspace(static_cast<unsigned char>(ch))) {
                ++i;
            } else if (ch == '(' || ch == ')') {
                tokens.push_back(std::string(1, ch));
                ++i;
            } else if (isalnum(static_cast<unsigned char>(ch))) {
                size_t j = i;
                while (j < text.size() && isalnum(static_cast<unsigned char>(text[j]))) ++j;
                tokens.push_back(text.substr(i, j - i));
                i = j;
            } else {
                throw std::invalid_argument(std::string("expression: bad character '") + ch + "'");
            }
        }
    }

    bool peek(const std::string& t) const { return pos < tokens.size() && tokens[pos] == t; }
    bool take(const std::string& t) {
        if (!peek(t)) return false;
        ++pos;
        return true;
    }
    void expect(const std::string& t) {
        if (!take(t)) throw std::invalid_argument("expression: expected '" + t + "'");
    }

    GeneratorExpression parse_expr() {
        GeneratorExpression e = parse_tensor();
        while (take("o")) e = expr_compose(std::move(e), parse_tensor());
        return e;
    }
    GeneratorExpression parse_tensor() {
        GeneratorExpression e = parse_unary();
        while (take("x")) e = expr_tensor(std::move(e), parse_unary());
        return e;
    }
    GeneratorExpression parse_unary() {
        if (take("t")) return expr_transpose(parse_unary());
        return parse_primary();
    }
    GeneratorExpression parse_primary() {
        if (take("(")) {
            GeneratorExpression e = parse_expr();
            expect(")");
            return e;
        }
        if (take("M10")) return expr_leaf(GeneratorExpression::M10);
        if (take("M12")) return expr_leaf(GeneratorExpression::M12);
        if (take("A")) return expr_leaf(GeneratorExpression::A);
        if (take("S")) return expr_leaf(GeneratorExpression::S);
        throw std::invalid_argument("expression: unexpected token");
    }
};

}  // namespace

GeneratorExpression parse_expression(const std::string& text) {
    Parser p(text);
    GeneratorExpression e = p.parse_expr();
    if (p.pos != p.tokens.size())
        throw std::invalid_argument("expression: trailing tokens");
    return e;
}

GeneratorExpression expr_identity() {
    return expr_compose(expr_leaf(GeneratorExpression::M12),
                        expr_transpose(expr_leaf(GeneratorExpression::M12)));
}

GeneratorExpression expr_identity_tensor(int r) {
    if (r < 1) throw std::invalid_argument("expr_identity_tensor: need r >= 1");
    GeneratorExpression e = expr_identity();
    for (int i = 1; i < r; ++i) e = expr_tensor(std::move(e), expr_identity());
    return e;
}

namespace {

// M with one output and j >= 1 inputs, grown by composing M12 wires on.
GeneratorExpression expr_M1(int j) {
    if (j == 1) return expr_identity();
    GeneratorExpression e = expr_leaf(GeneratorExpression::M12);
    for (int cur = 2; cur < j; ++cur) {
        GeneratorExpression grow = expr_leaf(GeneratorExpression::M12);
        grow = expr_tensor(std::move(grow), expr_identity_tensor(cur - 1));
        e = expr_compose(std::move(e), std::move(grow));
    }
    return e;
}

GeneratorExpression expr_M0(int j) {  // no outputs, j >= 1 inputs
    GeneratorExpression e = expr_transpose(expr_leaf(GeneratorExpression::M10));
    for (int cur = 1; cur < j; ++cur) {
        GeneratorExpression grow = expr_leaf(GeneratorExpression::M12);
        if (cur > 1) grow = expr_tensor(std::move(grow), expr_identity_tensor(cur - 1));
        e = expr_compose(std::move(e), std::move(grow));
    }
    return e;
}

}  // namespace

GeneratorExpression expr_M(int l, int k) {
    if (l < 0 || k < 0) throw std::invalid_argument("expr_M: bad arity");
    if (l == 0 && k == 0)
        return expr_compose(expr_transpose(expr_leaf(GeneratorExpression::M10)),
                            expr_leaf(GeneratorExpression::M10));
    if (l == 0) return expr_M0(k);
    if (k == 0) return expr_transpose(expr_M0(l));
    // start from (l,1) = transpose of (1,l), then grow inputs with M12 wires
    GeneratorExpression e = expr_transpose(expr_M1(l));
    for (int cur = 1; cur < k; ++cur) {
        GeneratorExpression grow = expr_leaf(GeneratorExpression::M12);
        if (cur > 1) grow = expr_tensor(std::move(grow), expr_identity_tensor(cur - 1));
        e = expr_compose(std::move(e), std::move(grow));
    }
    return e;
}

GeneratorExpression expr_M_looped(int l, int k) {
    // looped wire: M12 o (A x I) o t(M12), then widen with plain Ms
    GeneratorExpression ring = expr_compose(
        expr_compose(expr_leaf(GeneratorExpression::M12),
                     expr_tensor(expr_leaf(GeneratorExpression::A), expr_identity())),
        expr_transpose(expr_leaf(GeneratorExpression::M12)));
    return expr_compose(expr_compose(expr_M(l, 1), std::move(ring)), expr_M(1, k));
}

GeneratorExpression expr_star(int m, int d, StarVariant variant, bool looped) {
    auto base = [&](int inputs) {
        return looped ? expr_M_looped(m, inputs) : expr_M(m, inputs);
    };
    auto edges = [&]() {
        GeneratorExpression e = expr_leaf(GeneratorExpression::A);
        for (int i = 1; i < d; ++i)
            e = expr_tensor(std::move(e), expr_leaf(GeneratorExpression::A));
        return e;
    };
    switch (variant) {
        case StarVariant::plain:
            if (d == 0) return base(0);
            return expr_compose(base(d), edges());
        case StarVariant::left:
            if (d == 0) return base(1);
            return expr_compose(base(d + 1), expr_tensor(expr_identity(), edges()));
        case StarVariant::right:
            if (d == 0) return base(1);
            return expr_compose(base(d + 1), expr_tensor(edges(), expr_identity()));
    }
    throw std::logic_error("expr_star: bad variant");
}

namespace {

std::vector<int> shifted(const std::vector<int>& tuple, int removed) {
    std::vector<int> out;
    for (int v : tuple) out.push_back(v > removed ? v - 1 : v);
    return out;
}

// Orders of v's neighbourhood to try: embeddings first, then everything.
std::vector<std::vector<int>> candidate_orders(const Graph& g, int v,
                                               const std::vector<int>& nbrs) {
    std::vector<std::vector<int>> out;
    int d = static_cast<int>(nbrs.size());
    if (d > 1) {
        auto rs = rotation_system(g);
        std::vector<int> rot;
        for (int u : rs[v])
            if (u != v) rot.push_back(u);
        if (static_cast<int>(rot.size()) == d) {
            for (int dir = 0; dir < 2; ++dir) {
                for (int s = 0; s < d; ++s) {
                    std::vector<int> cand;
                    for (int i = 0; i < d; ++i) cand.push_back(rot[(s + i) % d]);
                    out.push_back(cand);
                }
                std::reverse(rot.begin(), rot.end());
            }
        }
    }
    std::vector<int> perm = nbrs;
    std::sort(perm.begin(), perm.end());
    do {
        out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

struct Candidate {
    int case_id;
    int v;
    int m, r, t;
    // occurrence bounds, case specific: case 1 uses [a_lo, a_hi] inside the
    // output tuple, case 2 the same inside the input tuple
    int lo = 0, hi = 0;
};

BiLabeledGraph make_rest(const BiLabeledGraph& h, const Candidate& c,
                         const std::vector<int>& order) {
    BiLabeledGraph rest;
    rest.graph = delete_vertex(h.graph, c.v);
    std::vector<int> w;
    for (int u : order) w.push_back(u > c.v ? u - 1 : u);
    auto a = shifted(h.out, c.v);
    auto b = shifted(h.in, c.v);
    int L = h.l(), K = h.k();
    switch (c.case_id) {
        case 0:
            rest.out = w;
            break;
        case 1:
            rest.out.assign(a.begin(), a.begin() + c.lo);
            rest.out.insert(rest.out.end(), w.begin(), w.end());
            rest.out.insert(rest.out.end(), a.begin() + c.hi + 1, a.end());
            rest.in = b;
            break;
        case 2:
            rest.out = a;
            rest.in.assign(b.begin(), b.begin() + c.lo);
            rest.in.insert(rest.in.end(), w.begin(), w.end());
            rest.in.insert(rest.in.end(), b.begin() + c.hi + 1, b.end());
            break;
        case 3:
            rest.out = w;
            rest.out.insert(rest.out.end(), a.begin() + c.m, a.end());
            rest.in.assign(b.begin() + c.r, b.end());
            break;
        case 4:
            rest.out.assign(a.begin(), a.begin() + (L - c.m));
            rest.out.insert(rest.out.end(), w.begin(), w.end());
            rest.in.assign(b.begin(), b.begin() + (K - c.r));
            break;
        default:
            throw std::logic_error("make_rest: bad case");
    }
    return rest;
}

}  // namespace

PluckStep pluck(const BiLabeledGraph& h) {
    h.validate();
    if (h.graph.n() < 2) throw std::invalid_argument("pluck: need at least two vertices");
    if (!in_P(h)) throw std::invalid_argument("pluck: not a member of the planar class");

    int L = h.l(), K = h.k(), points = L + K;
    std::vector<int> c = h.out;
    for (int j = K - 1; j >= 0; --j) c.push_back(h.in[j]);

    Candidate chosen;
    chosen.case_id = -1;
    if (points == 0) {
        chosen = {0, 0, 0, 0, 0};  // pluck the lowest vertex
    } else {
        std::map<int, std::vector<int>> occ;
        for (int p = 0; p < points; ++p) occ[c[p]].push_back(p);
        if (occ.size() == 1) {
            int v = c[0];
            if (K == 0)
                chosen = {1, v, L, 0, 0, 0, L - 1};
            else if (L == 0)
                chosen = {2, v, K, 0, 0, 0, K - 1};
            else
                chosen = {3, v, L, K, 0};
        } else {
            std::vector<Candidate> found;
            for (auto& [v, pos] : occ) {
                int sz = static_cast<int>(pos.size());
                bool linear = pos.back() - pos.front() == sz - 1;
                if (linear) {
                    int lo = pos.front(), hi = pos.back();
                    if (hi < L) {
                        found.push_back({1, v, sz, lo, L - 1 - hi, lo, hi});
                    } else if (lo >= L) {
                        // positions map to input indices in reverse
                        int blo = K - 1 - (hi - L), bhi = K - 1 - (lo - L);
                        found.push_back({2, v, sz, blo, K - 1 - bhi, blo, bhi});
                    } else {
                        int m = L - lo, r = hi - L + 1;
                        found.push_back({4, v, m, r, L - m});
                    }
                } else if (L > 0 && K > 0 && pos.front() == 0 && pos.back() == points - 1) {
                    // wrap-around arc: must be a gap-free suffix + prefix
                    int pre = 0;
                    while (pre < sz && pos[pre] == pre) ++pre;
                    int suf = 0;
                    while (suf < sz && pos[sz - 1 - suf] == points - 1 - suf) ++suf;
                    if (pre + suf == sz && pre <= L && suf <= K)
                        found.push_back({3, v, pre, suf, L - pre});
                }
            }
            if (found.empty()) throw std::logic_error("pluck: no consecutive vertex found");
            std::sort(found.begin(), found.end(), [](const Candidate& a, const Candidate& b) {
                if (a.case_id != b.case_id) return a.case_id < b.case_id;
                return a.v < b.v;
            });
            chosen = found.front();
        }
    }

    std::vector<int> nbrs;
    for (int u : h.graph.neighbors(chosen.v))
        if (u != chosen.v) nbrs.push_back(u);

    PluckStep step;
    step.case_id = chosen.case_id;
    step.looped = h.graph.has_loop(chosen.v);
    step.m = chosen.m;
    step.r = chosen.r;
    step.t = chosen.t;
    step.d = static_cast<int>(nbrs.size());
    for (const auto& order : candidate_orders(h.graph, chosen.v, nbrs)) {
        BiLabeledGraph rest = make_rest(h, chosen, order);
        if (in_P(rest)) {
            step.rest = rest;
            return step;
        }
    }
    throw std::logic_error("pluck: no neighbour order keeps the rest in the class");
}

BiLabeledGraph reconstruct(const PluckStep& s) {
    auto star = [&](StarVariant variant) { return gen_star(s.m, s.d, variant, s.looped); };
    switch (s.case_id) {
        case 0:
            return compose(gen_star(0, s.d, StarVariant::plain, s.looped), s.rest);
        case 1:
        case 2: {
            BiLabeledGraph w = star(StarVariant::plain);
            if (s.r > 0) w = tensor(identity_tensor(s.r), w);
            if (s.t > 0) w = tensor(w, identity_tensor(s.t));
            if (s.case_id == 1) return compose(w, s.rest);
            return compose(s.rest, transpose(w));
        }
        case 3: {
            BiLabeledGraph w = star(StarVariant::left);
            if (s.t > 0) w = tensor(w, identity_tensor(s.t));
            return compose(w, tensor(gen_M(1, s.r), s.rest));
        }
        case 4: {
            BiLabeledGraph w = star(StarVariant::right);
            if (s.t > 0) w = tensor(identity_tensor(s.t), w);
            return compose(w, tensor(s.rest, gen_M(1, s.r)));
        }
        default:
            throw std::invalid_argument("reconstruct: bad case id");
    }
}

GeneratorExpression decompose(const BiLabeledGraph& h) {
    h.validate();
    if (h.graph.n() == 0) throw std::invalid_argument("decompose: empty graph");
    if (!in_P(h)) throw std::invalid_argument("decompose: not a member of the planar class");
    if (h.graph.n() == 1)
        return h.graph.has_loop(0) ? expr_M_looped(h.l(), h.k()) : expr_M(h.l(), h.k());

    PluckStep s = pluck(h);
    GeneratorExpression rest = decompose(s.rest);
    auto star = [&](StarVariant variant) { return expr_star(s.m, s.d, variant, s.looped); };
    switch (s.case_id) {
        case 0:
            return expr_compose(expr_star(0, s.d, StarVariant::plain, s.looped), std::move(rest));
        case 1:
        case 2: {
            GeneratorExpression w = star(StarVariant::plain);
            if (s.r > 0) w = expr_tensor(expr_identity_tensor(s.r), std::move(w));
            if (s.t > 0) w = expr_tensor(std::move(w), expr_identity_tensor(s.t));
            if (s.case_id == 1) return expr_compose(std::move(w), std::move(rest));
            return expr_compose(std::move(rest), expr_transpose(std::move(w)));
        }
        case 3: {
            GeneratorExpression w = star(StarVariant::left);
            if (s.t > 0) w = expr_tensor(std::move(w), expr_identity_tensor(s.t));
            return expr_compose(std::move(w), expr_tensor(expr_M(1, s.r), std::move(rest)));
        }
        case 4: {
            GeneratorExpression w = star(StarVariant::right);
            if (s.t > 0) w = expr_tensor(expr_identity_tensor(s.t), std::move(w));
            return expr_compose(std::move(w), expr_tensor(std::move(rest), expr_M(1, s.r)));
        }
        default:
            throw std::logic_error("decompose: bad case id");
    }
}

}  // namespace blg
