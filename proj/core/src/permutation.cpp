#include "coreblocks/permutation.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace coreblocks {

Perm identity_perm(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm compose(const Perm& p, const Perm& q) {
    Perm r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
    return r;
}

Perm perm_inverse(const Perm& p) {
    Perm r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<uint8_t>(i);
    return r;
}

Partition perm_cycle_type(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    std::vector<int> lens;
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = p[j];
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end(), std::greater<>());
    return Partition(std::move(lens));
}

long long perm_order(const Perm& p) {
    long long o = 1;
    Partition type = perm_cycle_type(p);
    for (int len : type.parts()) o = std::lcm(o, (long long)len);
    return o;
}

uint64_t factorial_u64(int n) {
    uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<uint64_t>(i);
    return f;
}

uint64_t perm_rank(const Perm& p) {
    const int n = static_cast<int>(p.size());
    uint64_t rank = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (p[j] < p[i]) ++smaller;
        rank = rank * static_cast<uint64_t>(n - i) + static_cast<uint64_t>(smaller);
    }
    return rank;
}

Perm perm_unrank(int n, uint64_t rank) {
    std::vector<uint8_t> digits(n, 0);
    for (int i = n - 1; i >= 0; --i) {
        digits[i] = static_cast<uint8_t>(rank % static_cast<uint64_t>(n - i));
        rank /= static_cast<uint64_t>(n - i);
    }
    std::vector<uint8_t> avail(n);
    std::iota(avail.begin(), avail.end(), 0);
    Perm p(n);
    for (int i = 0; i < n; ++i) {
        p[i] = avail[digits[i]];
        avail.erase(avail.begin() + digits[i]);
    }
    return p;
}

std::string cycle_notation(const Perm& p) {
    std::ostringstream os;
    std::vector<bool> seen(p.size(), false);
    bool any = false;
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == i) { seen[i] = true; continue; }
        any = true;
        os << '(';
        size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) os << ' ';
            os << (j + 1);
            first = false;
            j = p[j];
        }
        os << ')';
    }
    return any ? os.str() : "()";
}

Perm parse_cycles(int n, const std::string& text) {
    Perm p = identity_perm(n);
    size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) { ++i; continue; }
        if (text[i] != '(') throw std::invalid_argument("expected '(' in cycle notation");
        size_t close = text.find(')', i);
        if (close == std::string::npos)
            throw std::invalid_argument("unterminated cycle");
        std::string body = text.substr(i + 1, close - i - 1);
        for (char& ch : body)
            if (ch == ',') ch = ' ';
        std::istringstream is(body);
        std::vector<int> pts;
        int v;
        while (is >> v) {
            if (v < 1 || v > n) throw std::invalid_argument("cycle point out of range");
            pts.push_back(v - 1);
        }
        for (size_t k = 0; k < pts.size(); ++k) {
            int from = pts[k], to = pts[(k + 1) % pts.size()];
            if (p[from] != from && pts.size() > 1)
                throw std::invalid_argument("cycles must be disjoint");
            if (pts.size() > 1) p[from] = static_cast<uint8_t>(to);
        }
        i = close + 1;
    }
    return p;
}

std::vector<Perm> group_closure(int n, const std::vector<Perm>& gens) {
    std::set<Perm> elems;
    std::vector<Perm> frontier{identity_perm(n)};
    elems.insert(frontier[0]);
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const Perm& e : frontier) {
            for (const Perm& g : gens) {
                Perm prod = compose(g, e);
                if (elems.insert(prod).second) next.push_back(std::move(prod));
            }
        }
        frontier = std::move(next);
    }
    return {elems.begin(), elems.end()};
}

std::vector<uint64_t> centralizer_ranks(int n, const std::vector<Perm>& gens) {
    std::vector<uint64_t> out;
    const uint64_t total = factorial_u64(n);
    for (uint64_t r = 0; r < total; ++r) {
        Perm h = perm_unrank(n, r);
        bool central = true;
        for (const Perm& g : gens) {
            if (compose(h, g) != compose(g, h)) { central = false; break; }
        }
        if (central) out.push_back(r);
    }
    return out;
}

const SymmetricGroupContext& SymmetricGroupContext::get(int n) {
    static std::map<int, SymmetricGroupContext> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    SymmetricGroupContext ctx;
    ctx.n = n;
    ctx.class_types = enumerate_partitions(n);
    std::map<Partition, int> index;
    for (size_t i = 0; i < ctx.class_types.size(); ++i)
        index[ctx.class_types[i]] = static_cast<int>(i);
    const uint64_t total = factorial_u64(n);
    ctx.class_of.resize(total);
    ctx.class_rep.assign(ctx.class_types.size(), total);
    for (uint64_t r = 0; r < total; ++r) {
        int c = index.at(perm_cycle_type(perm_unrank(n, r)));
        ctx.class_of[r] = c;
        if (ctx.class_rep[c] == total) ctx.class_rep[c] = r;
    }
    return cache.emplace(n, std::move(ctx)).first->second;
}

}  // namespace coreblocks
