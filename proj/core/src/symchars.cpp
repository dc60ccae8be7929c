#include "coreblocks/symchars.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "coreblocks/config.hpp"

namespace coreblocks {

mpz_class factorial(int n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

bool CycleType::is_ell_regular(int ell) const {
    for (int p : partition.parts())
        if (p % ell == 0) return false;
    return true;
}

mpz_class centralizer_order(const Partition& mu) {
    mpz_class z = 1;
    const auto& p = mu.parts();
    size_t i = 0;
    while (i < p.size()) {
        size_t j = i;
        while (j < p.size() && p[j] == p[i]) ++j;
        int mult = static_cast<int>(j - i);
        mpz_class kpow;
        mpz_ui_pow_ui(kpow.get_mpz_t(), p[i], mult);
        z *= kpow * factorial(mult);
        i = j;
    }
    return z;
}

std::vector<CycleType> conjugacy_classes(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    std::vector<CycleType> out;
    mpz_class nfac = factorial(n);
    for (Partition& mu : enumerate_partitions(n)) {
        CycleType ct;
        ct.class_size = nfac / centralizer_order(mu);
        ct.order_lcm = 1;
        for (int p : mu.parts()) ct.order_lcm = std::lcm(ct.order_lcm, (long long)p);
        ct.partition = std::move(mu);
        out.push_back(std::move(ct));
    }
    return out;
}

mpz_class MnEvaluator::eval(const Partition& lambda, const std::vector<int>& rest) {
    if (lambda.empty()) return 1;
    auto key = std::make_pair(lambda.parts(), rest);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    const int d = rest.front();
    std::vector<int> tail(rest.begin() + 1, rest.end());
    mpz_class total = 0;
    for (const Hook& h : hooks_of_length(lambda, d)) {
        mpz_class term = eval(remove_hook(lambda, h), tail);
        if (h.height % 2) total -= term; else total += term;
    }
    memo_.emplace(std::move(key), total);
    return total;
}

mpz_class MnEvaluator::value(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw std::invalid_argument("character label and cycle type have different sizes");
    return eval(lambda, mu.parts());
}

mpz_class mn_value(const Partition& lambda, const Partition& mu) {
    MnEvaluator ev;
    return ev.value(lambda, mu);
}

int CharTable::row_of(const Partition& lambda) const {
    for (size_t i = 0; i < characters.size(); ++i)
        if (characters[i] == lambda) return static_cast<int>(i);
    throw std::invalid_argument("character " + lambda.to_string() + " not in table");
}

const mpz_class& CharTable::degree(const Partition& lambda) const {
    return values[row_of(lambda)].back();  // last class is (1^n)
}

CharTable character_table(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (n > config::chartable_bound())
        throw std::domain_error("character table size bound exceeded");
    CharTable t;
    t.n = n;
    t.characters = enumerate_partitions(n);
    t.classes = conjugacy_classes(n);
    MnEvaluator ev;
    t.values.resize(t.characters.size());
    for (size_t r = 0; r < t.characters.size(); ++r) {
        t.values[r].reserve(t.classes.size());
        for (const CycleType& c : t.classes)
            t.values[r].push_back(ev.value(t.characters[r], c.partition));
    }
    return t;
}

mpz_class imn_value(const Partition& lambda, int d, int w, const Partition& rest) {
    if (lambda.size() != rest.size() + w * d)
        throw std::invalid_argument("size mismatch in iterated evaluation");
    CoreQuotient cq = d_core(lambda, d);
    if (w != cq.weight)
        throw std::invalid_argument(
            "extended evaluation: w does not equal the full d-weight");
    return cq.sign * removal_path_count(lambda, d) * mn_value(cq.core, rest);
}

bool branching_check(int n) {
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    MnEvaluator ev;
    for (const Partition& lambda : enumerate_partitions(n)) {
        for (const Partition& mu_rest : enumerate_partitions(n - 1)) {
            // Restriction value: evaluate lambda on mu_rest with a 1-cycle added.
            std::vector<int> full = mu_rest.parts();
            full.push_back(1);
            std::sort(full.begin(), full.end(), std::greater<>());
            mpz_class lhs = ev.value(lambda, Partition(full));
            mpz_class rhs = 0;
            for (const Hook& h : hooks_of_length(lambda, 1)) {
                mpz_class term = ev.value(remove_hook(lambda, h), mu_rest);
                if (h.height % 2) rhs -= term; else rhs += term;
            }
            if (lhs != rhs) return false;
        }
    }
    return true;
}

bool check_row_orthogonality(const CharTable& t) {
    mpz_class nfac = factorial(t.n);
    for (size_t r1 = 0; r1 < t.characters.size(); ++r1) {
        for (size_t r2 = r1; r2 < t.characters.size(); ++r2) {
            mpz_class s = 0;
            for (size_t c = 0; c < t.classes.size(); ++c)
                s += t.classes[c].class_size * t.values[r1][c] * t.values[r2][c];
            if (s != (r1 == r2 ? nfac : mpz_class(0))) return false;
        }
    }
    return true;
}

bool check_column_orthogonality(const CharTable& t) {
    for (size_t c1 = 0; c1 < t.classes.size(); ++c1) {
        for (size_t c2 = c1; c2 < t.classes.size(); ++c2) {
            mpz_class s = 0;
            for (size_t r = 0; r < t.characters.size(); ++r)
                s += t.values[r][c1] * t.values[r][c2];
            mpz_class expect =
                c1 == c2 ? centralizer_order(t.classes[c1].partition) : mpz_class(0);
            if (s != expect) return false;
        }
    }
    return true;
}

std::string CharTable::to_json() const {
    std::ostringstream os;
    os << "{\"n\":" << n << ",\"characters\":[";
    for (size_t i = 0; i < characters.size(); ++i) {
        if (i) os << ',';
        os << '"' << characters[i].to_string() << '"';
    }
    os << "],\"classes\":[";
    for (size_t i = 0; i < classes.size(); ++i) {
        if (i) os << ',';
        os << "{\"type\":\"" << classes[i].partition.to_string() << "\",\"size\":\""
           << classes[i].class_size.get_str() << "\"}";
    }
    os << "],\"values\":[";
    for (size_t r = 0; r < values.size(); ++r) {
        if (r) os << ',';
        os << '[';
        for (size_t c = 0; c < values[r].size(); ++c) {
            if (c) os << ',';
            os << '"' << values[r][c].get_str() << '"';
        }
        os << ']';
    }
    os << "]}";
    return os.str();
}

}  // namespace coreblocks
