#include "blg/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace blg {

namespace {
std::vector<int> block_of_point(const LabeledPartition& p) {
    std::vector<int> owner(p.points(), -1);
    for (size_t b = 0; b < p.blocks.size(); ++b)
        for (int pt : p.blocks[b]) {
            if (pt < 0 || pt >= p.points() || owner[pt] != -1)
                throw std::invalid_argument("partition: bad point cover");
            owner[pt] = static_cast<int>(b);
        }
    for (int o : owner)
        if (o < 0) throw std::invalid_argument("partition: uncovered point");
    return owner;
}

struct UF {
    std::vector<int> p;
    explicit UF(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(int a, int b) { p[find(a)] = find(b); }
};
}  // namespace

void LabeledPartition::validate() const {
    if (l < 0 || k < 0 || empty_parts < 0) throw std::invalid_argument("partition: bad shape");
    block_of_point(*this);
    for (const auto& b : blocks)
        if (b.empty()) throw std::invalid_argument("partition: explicit empty block");
}

void LabeledPartition::normalize() {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end());
}

bool LabeledPartition::operator==(const LabeledPartition& o) const {
    LabeledPartition a = *this, b = o;
    a.normalize();
    b.normalize();
    return a.l == b.l && a.k == b.k && a.empty_parts == b.empty_parts && a.blocks == b.blocks;
}

bool is_noncrossing(const LabeledPartition& p) {
    auto owner = block_of_point(p);
    int n = p.points();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d)
                    if (owner[a] == owner[c] && owner[b] == owner[d] && owner[a] != owner[b])
                        return false;
    return true;
}

BiLabeledGraph partition_to_blg(const LabeledPartition& p) {
    LabeledPartition q = p;
    q.normalize();
    auto owner = block_of_point(q);
    BiLabeledGraph h;
    h.graph = Graph(static_cast<int>(q.blocks.size()) + q.empty_parts);
    for (int i = 0; i < q.l; ++i) h.out.push_back(owner[i]);
    for (int j = 0; j < q.k; ++j) h.in.push_back(owner[q.l + q.k - 1 - j]);
    return h;
}

LabeledPartition blg_to_partition(const BiLabeledGraph& h) {
    LabeledPartition p;
    p.l = h.l();
    p.k = h.k();
    std::map<int, std::vector<int>> by_vertex;
    for (int i = 0; i < p.l; ++i) by_vertex[h.out[i]].push_back(i);
    for (int j = 0; j < p.k; ++j) by_vertex[h.in[j]].push_back(p.l + p.k - 1 - j);
    for (auto& [v, pts] : by_vertex) {
        std::sort(pts.begin(), pts.end());
        p.blocks.push_back(pts);
    }
    p.empty_parts = h.graph.n() - static_cast<int>(by_vertex.size());
    p.normalize();
    return p;
}

LabeledPartition compose(const LabeledPartition& p1, const LabeledPartition& p2) {
    if (p1.k != p2.l) throw std::invalid_argument("partition compose: arity mismatch");
    auto o1 = block_of_point(p1);
    auto o2 = block_of_point(p2);
    int b1 = static_cast<int>(p1.blocks.size());
    int b2 = static_cast<int>(p2.blocks.size());
    UF uf(b1 + b2);
    for (int i = 1; i <= p1.k; ++i)
        uf.unite(o1[p1.l + p1.k - i], b1 + o2[i - 1]);
    LabeledPartition r;
    r.l = p1.l;
    r.k = p2.k;
    std::map<int, std::vector<int>> groups;
    for (int p = 0; p < p1.l; ++p) groups[uf.find(o1[p])].push_back(p);
    for (int q = p2.l; q < p2.l + p2.k; ++q)
        groups[uf.find(b1 + o2[q])].push_back(p1.l + (q - p2.l));
    for (auto& [g, pts] : groups) r.blocks.push_back(pts);
    // middle blocks that touch no surviving point close up
    std::vector<char> open(b1 + b2, 0);
    for (auto& [g, pts] : groups) open[g] = 1;
    int closed = 0;
    for (int b = 0; b < b1 + b2; ++b)
        if (uf.find(b) == b && !open[b]) ++closed;
    r.empty_parts = p1.empty_parts + p2.empty_parts + closed;
    r.normalize();
    return r;
}

LabeledPartition tensor(const LabeledPartition& p1, const LabeledPartition& p2) {
    LabeledPartition r;
    r.l = p1.l + p2.l;
    r.k = p1.k + p2.k;
    r.empty_parts = p1.empty_parts + p2.empty_parts;
    for (const auto& b : p1.blocks) {
        std::vector<int> nb;
        for (int p : b) nb.push_back(p < p1.l ? p : p + p2.l + p2.k);
        r.blocks.push_back(nb);
    }
    for (const auto& b : p2.blocks) {
        std::vector<int> nb;
        for (int p : b) nb.push_back(p1.l + p);
        r.blocks.push_back(nb);
    }
    r.normalize();
    return r;
}

LabeledPartition transpose(const LabeledPartition& p) {
    LabeledPartition r;
    r.l = p.k;
    r.k = p.l;
    r.empty_parts = p.empty_parts;
    int n = p.points();
    for (const auto& b : p.blocks) {
        std::vector<int> nb;
        for (int pt : b) nb.push_back(n - 1 - pt);
        r.blocks.push_back(nb);
    }
    r.normalize();
    return r;
}

std::vector<LabeledPartition> enumerate_partitions(int l, int k) {
    int n = l + k;
    std::vector<LabeledPartition> out;
    std::vector<int> rgs(n, 0);
    for (;;) {
        LabeledPartition p;
        p.l = l;
        p.k = k;
        int mx = n ? *std::max_element(rgs.begin(), rgs.end()) : -1;
        p.blocks.assign(mx + 1, {});
        for (int i = 0; i < n; ++i) p.blocks[rgs[i]].push_back(i);
        p.normalize();
        out.push_back(p);
        if (n == 0) break;
        // next restricted growth string
        int i = n - 1;
        while (i > 0) {
            int cap = *std::max_element(rgs.begin(), rgs.begin() + i) + 1;
            if (rgs[i] < cap) break;
            --i;
        }
        if (i == 0) break;
        ++rgs[i];
        std::fill(rgs.begin() + i + 1, rgs.end(), 0);
    }
    return out;
}

}  // namespace blg
