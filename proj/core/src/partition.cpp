#include "coreblocks/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace coreblocks {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

Partition Partition::parse(const std::string& text) {
    std::string s = text;
    if (!s.empty() && s.front() == '[') {
        if (s.back() != ']')
            throw std::invalid_argument("unbalanced brackets in partition: " + text);
        s = s.substr(1, s.size() - 2);
    }
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t b = tok.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        size_t e = tok.find_last_not_of(" \t");
        parts.push_back(std::stoi(tok.substr(b, e - b + 1)));
    }
    return Partition(std::move(parts));
}

std::string Partition::to_string() const {
    std::string out = "[";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out + "]";
}

Partition conjugate(const Partition& lambda) {
    const auto& p = lambda.parts();
    if (p.empty()) return {};
    std::vector<int> cols(p[0], 0);
    for (int part : p)
        for (int j = 0; j < part; ++j) ++cols[j];
    return Partition(std::move(cols));
}

BetaSet beta_set(const Partition& lambda, int bead_count) {
    if (bead_count < lambda.length())
        throw std::invalid_argument("bead count below number of parts");
    BetaSet beads(bead_count);
    const auto& p = lambda.parts();
    for (int i = 0; i < bead_count; ++i) {
        int part = i < lambda.length() ? p[i] : 0;
        beads[i] = part + bead_count - 1 - i;
    }
    return beads;
}

Partition partition_from_beta(const BetaSet& beads) {
    BetaSet b = beads;
    std::sort(b.begin(), b.end(), std::greater<>());
    for (size_t i = 1; i < b.size(); ++i)
        if (b[i] == b[i - 1]) throw std::invalid_argument("beta set beads must be distinct");
    const int k = static_cast<int>(b.size());
    std::vector<int> parts;
    for (int i = 0; i < k; ++i) {
        int part = b[i] - (k - 1 - i);
        if (part < 0) throw std::invalid_argument("invalid beta set");
        if (part > 0) parts.push_back(part);
    }
    return Partition(std::move(parts));
}

std::vector<Hook> hooks_of_length(const Partition& lambda, int d) {
    if (d < 1) throw std::invalid_argument("hook length must be positive");
    std::vector<Hook> hooks;
    if (lambda.empty()) return hooks;
    const int k = lambda.length();
    BetaSet beads = beta_set(lambda, k);  // descending
    std::vector<bool> present(beads[0] + 1, false);
    for (int a : beads) present[a] = true;
    for (int i = 0; i < k; ++i) {
        int a = beads[i];
        if (a - d < 0 || present[a - d]) continue;
        Hook h;
        h.bead_from = a;
        h.bead_to = a - d;
        h.length = d;
        h.height = 0;
        for (int b = a - d + 1; b < a; ++b)
            if (present[b]) ++h.height;
        h.row = i + 1;
        h.col = lambda.parts()[i] - (d - 1 - h.height);
        hooks.push_back(h);
    }
    return hooks;  // already ordered by decreasing a
}

Partition remove_hook(const Partition& lambda, const Hook& hook) {
    BetaSet beads = beta_set(lambda, lambda.length());
    auto it = std::find(beads.begin(), beads.end(), hook.bead_from);
    if (it == beads.end() ||
        std::find(beads.begin(), beads.end(), hook.bead_to) != beads.end() ||
        hook.bead_to != hook.bead_from - hook.length || hook.bead_to < 0)
        throw std::invalid_argument("hook does not belong to partition");
    *it = hook.bead_to;
    return partition_from_beta(beads);
}

bool is_d_core(const Partition& lambda, int d) {
    if (d < 1) throw std::invalid_argument("d must be positive");
    if (lambda.empty()) return true;
    const int k = lambda.length();
    const auto& p = lambda.parts();
    int top = p[0] + k - 1;
    std::vector<bool> present(top + 1, false);
    for (int i = 0; i < k; ++i) present[p[i] + k - 1 - i] = true;
    for (int i = 0; i < k; ++i) {
        int a = p[i] + k - 1 - i;
        if (a - d >= 0 && !present[a - d]) return false;
    }
    return true;
}

CoreQuotient d_core(const Partition& lambda, int d) {
    if (d < 1) throw std::invalid_argument("d must be positive");
    CoreQuotient out;
    out.d = d;
    out.sign = 1;
    Partition cur = lambda;
    // Canonical path: always remove the hook with the largest bead.
    for (;;) {
        auto hooks = hooks_of_length(cur, d);
        if (hooks.empty()) break;
        out.sign *= (hooks[0].height % 2 == 0) ? 1 : -1;
        cur = remove_hook(cur, hooks[0]);
    }
    out.weight = (lambda.size() - cur.size()) / d;
    out.core = std::move(cur);
    return out;
}

CoreQuotient d_quotient(const Partition& lambda, int d) {
    CoreQuotient out = d_core(lambda, d);
    // Bead count: smallest multiple of d covering all parts.
    int k = std::max(lambda.length(), 1);
    k = ((k + d - 1) / d) * d;
    BetaSet beads = beta_set(lambda, k);
    out.quotient.resize(d);
    for (int r = 0; r < d; ++r) {
        BetaSet runner;
        for (int a : beads)
            if (a % d == r) runner.push_back((a - r) / d);
        out.quotient[r] = partition_from_beta(runner);
    }
    return out;
}

Partition reconstruct_from_quotient(const CoreQuotient& cq) {
    const int d = cq.d;
    if (d < 1) throw std::invalid_argument("d must be positive");
    if (static_cast<int>(cq.quotient.size()) != d)
        throw std::invalid_argument("quotient must have exactly d parts");
    if (!is_d_core(cq.core, d))
        throw std::invalid_argument("core is not a d-core");
    int maxq = 0;
    for (const auto& q : cq.quotient) maxq = std::max(maxq, q.length());
    int k = std::max(cq.core.length(), 1) + d * maxq;
    k = ((k + d - 1) / d) * d;
    BetaSet core_beads = beta_set(cq.core, k);
    BetaSet beads;
    for (int r = 0; r < d; ++r) {
        BetaSet runner;
        for (int a : core_beads)
            if (a % d == r) runner.push_back((a - r) / d);
        // The core is flush on every runner, so runner == {c-1,...,1,0}.
        int count = static_cast<int>(runner.size());
        BetaSet qbeads = beta_set(cq.quotient[r], count);
        for (int pos : qbeads) beads.push_back(pos * d + r);
    }
    return partition_from_beta(beads);
}

mpz_class removal_path_count(const Partition& lambda, int d) {
    if (d < 1) throw std::invalid_argument("d must be positive");
    std::map<Partition, mpz_class> memo;
    std::function<const mpz_class&(const Partition&)> count =
        [&](const Partition& p) -> const mpz_class& {
        auto it = memo.find(p);
        if (it != memo.end()) return it->second;
        auto hooks = hooks_of_length(p, d);
        mpz_class total = 0;
        if (hooks.empty()) {
            total = 1;
        } else {
            for (const Hook& h : hooks) total += count(remove_hook(p, h));
        }
        return memo.emplace(p, std::move(total)).first->second;
    };
    return count(lambda);
}

void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& fn) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    std::vector<int> parts;
    if (n == 0) {
        fn(parts);
        return;
    }
    // Descending lexicographic generation.
    std::function<void(int, int)> rec = [&](int rem, int maxpart) {
        if (rem == 0) {
            fn(parts);
            return;
        }
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            parts.push_back(p);
            rec(rem - p, p);
            parts.pop_back();
        }
    };
    rec(n, n);
}

std::vector<Partition> enumerate_partitions(int n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const std::vector<int>& parts) {
        out.emplace_back(parts);
    });
    return out;
}

mpz_class partition_count(int n) {
    if (n < 0) return 0;
    std::vector<mpz_class> p(n + 1, 0);
    p[0] = 1;
    for (int j = 1; j <= n; ++j)
        for (int k = j; k <= n; ++k) p[k] += p[k - j];
    return p[n];
}

}  // namespace coreblocks
