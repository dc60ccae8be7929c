#include "cli_lib.hpp"

#include <CLI11.hpp>
#include <sstream>

#include "coreblocks/config.hpp"
#include "coreblocks/cores.hpp"
#include "coreblocks/definingchar.hpp"
#include "coreblocks/glnq.hpp"
#include "coreblocks/partition.hpp"
#include "coreblocks/selftest.hpp"
#include "coreblocks/symblocks.hpp"
#include "coreblocks/symchars.hpp"

namespace coreblocks::cli {

using nlohmann::json;

namespace {

json partition_json(const Partition& p) { return p.to_string(); }

void cmd_chartable(int n, CommandResult& r) {
    if (n > config::chartable_bound())
        throw std::domain_error("n exceeds the character-table bound");
    CharTable t = character_table(n);
    json rows = json::array(), chars = json::array(), classes = json::array(),
         sizes = json::array();
    for (const Partition& c : t.characters) chars.push_back(partition_json(c));
    for (const CycleType& c : t.classes) {
        classes.push_back(partition_json(c.partition));
        sizes.push_back(c.class_size.get_str());
    }
    for (const auto& row : t.values) {
        json jr = json::array();
        for (const mpz_class& v : row) jr.push_back(v.get_str());
        rows.push_back(std::move(jr));
    }
    r.payload = {{"n", n}, {"characters", chars}, {"classes", classes},
                 {"class_sizes", sizes}, {"values", rows}};
    std::vector<std::string> header{"character"};
    for (const CycleType& c : t.classes) header.push_back(c.partition.to_string());
    r.table.push_back(std::move(header));
    for (size_t i = 0; i < t.characters.size(); ++i) {
        std::vector<std::string> row{t.characters[i].to_string()};
        for (const mpz_class& v : t.values[i]) row.push_back(v.get_str());
        r.table.push_back(std::move(row));
    }
}

void cmd_mn(const std::string& ls, const std::string& ms, CommandResult& r) {
    Partition lambda = Partition::parse(ls), mu = Partition::parse(ms);
    if (lambda.size() != mu.size())
        throw std::invalid_argument("lambda and mu must have equal size");
    mpz_class v = mn_value(lambda, mu);
    r.payload = {{"lambda", partition_json(lambda)}, {"mu", partition_json(mu)},
                 {"value", v.get_str()}};
    r.table = {{"lambda", "mu", "value"},
               {lambda.to_string(), mu.to_string(), v.get_str()}};
}

json block_json(const BlockDescriptor& b) {
    json members = json::array();
    for (const Partition& m : b.members) members.push_back(partition_json(m));
    return {{"core", partition_json(b.core)}, {"weight", b.weight},
            {"defect", b.defect_valuation}, {"abelian", b.abelian_defect},
            {"defect_group", b.defect_group_label},
            {"members", members}, {"k", b.members.size()}};
}

void cmd_blocks(int n, int ell, CommandResult& r) {
    json out = json::array();
    r.table.push_back({"core", "weight", "defect", "abelian", "k"});
    for (const BlockDescriptor& b : blocks(n, ell)) {
        out.push_back(block_json(b));
        r.table.push_back({b.core.to_string(), std::to_string(b.weight),
                           std::to_string(b.defect_valuation),
                           b.abelian_defect ? "true" : "false",
                           std::to_string(b.members.size())});
    }
    r.payload = {{"n", n}, {"ell", ell}, {"blocks", std::move(out)}};
}

const BlockDescriptor& find_block(const std::vector<BlockDescriptor>& blks,
                                  const Partition& core) {
    for (const BlockDescriptor& b : blks)
        if (b.core == core) return b;
    throw std::invalid_argument("no block with core " + core.to_string());
}

void cmd_idempotent(int n, int ell, const std::string& cs, CommandResult& r) {
    Partition core = Partition::parse(cs);
    auto blks = blocks(n, ell);
    const BlockDescriptor& b = find_block(blks, core);
    CharTable t = character_table(n);
    CentralElementQ e = block_idempotent(b, t);
    json coeffs = json::array();
    r.table.push_back({"class", "coefficient"});
    for (const CycleType& c : t.classes) {
        std::string v = e.at_class(c.partition).get_str();
        coeffs.push_back({{"class", partition_json(c.partition)}, {"coeff", v}});
        r.table.push_back({c.partition.to_string(), v});
    }
    r.payload = {{"n", n}, {"ell", ell}, {"core", partition_json(core)},
                 {"coefficients", std::move(coeffs)}};
}

void cmd_brauer(int n, int ell, const std::string& cs, int cycles, CommandResult& r) {
    Partition core = Partition::parse(cs);
    auto blks = blocks(n, ell);
    const BlockDescriptor& b = find_block(blks, core);
    CharTable t = character_table(n);
    CentralElementMod e = reduce_mod(block_idempotent(b, t), ell);
    auto gens = disjoint_ell_cycles(n, ell, cycles);
    CentralElementMod img = brauer_morphism(e, gens);
    const int n_p = n - cycles * ell;
    const bool predicted_zero = core.size() > n_p;
    bool matches;
    if (predicted_zero) {
        matches = img.is_zero();
    } else if (n_p == 0) {
        // Image should be the identity coefficient alone.
        matches = true;
        for (size_t i = 0; i < img.coeff.size(); ++i) {
            unsigned expect = i == perm_rank(identity_perm(n)) ? 1u : 0u;
            if (img.coeff[i] != expect) { matches = false; break; }
        }
    } else {
        CharTable st = character_table(n_p);
        auto sblks = blocks(n_p, ell);
        CentralElementMod small = reduce_mod(block_idempotent(find_block(sblks, core), st), ell);
        matches = true;
        for (uint64_t rank : centralizer_ranks(n, gens)) {
            Perm h = perm_unrank(n, rank);
            bool tail_identity = true;
            for (int i = n_p; i < n; ++i)
                if (h[i] != i) tail_identity = false;
            unsigned expect = 0;
            if (tail_identity) {
                Perm h1(h.begin(), h.begin() + n_p);
                expect = small.coeff[perm_rank(h1)];
            }
            if (img.coeff[rank] != expect) { matches = false; break; }
        }
        if (matches) {
            for (size_t i = 0; i < img.coeff.size(); ++i) {
                Perm h = perm_unrank(n, i);
                bool central = true;
                for (const Perm& g : gens)
                    if (compose(h, g) != compose(g, h)) { central = false; break; }
                if (!central && img.coeff[i] != 0) { matches = false; break; }
            }
        }
    }
    r.payload = {{"n", n}, {"ell", ell}, {"core", partition_json(core)},
                 {"cycles", cycles}, {"fixed_points", n_p},
                 {"image_zero", img.is_zero()}, {"predicted_zero", predicted_zero},
                 {"matches_formula", matches}};
    if (!matches) {
        r.status = Status::error;
        r.diagnostics.push_back("brute-force image disagrees with the truncation formula");
    }
    r.table = {{"fixed_points", "image_zero", "predicted_zero", "matches_formula"},
               {std::to_string(n_p), img.is_zero() ? "true" : "false",
                predicted_zero ? "true" : "false", matches ? "true" : "false"}};
}

void cmd_cores_count(int d, int nmax, CommandResult& r) {
    CoreCountSeries s = count_cores_genfun(d, nmax);
    json counts = json::array();
    r.table.push_back({"n", "count"});
    for (int n = 0; n <= nmax; ++n) {
        counts.push_back(s.counts[n].get_str());
        r.table.push_back({std::to_string(n), s.counts[n].get_str()});
    }
    r.payload = {{"d", d}, {"nmax", nmax}, {"counts", std::move(counts)}};
}

void cmd_cores_kiming(int d, long long n, CommandResult& r) {
    KimingSolution s = kiming_construct(d, n);
    r.payload = json::parse(kiming_trace_json(s));
    r.table.push_back({"field", "value"});
    for (auto& [key, value] : r.payload.items())
        r.table.push_back({key, value.dump()});
}

void cmd_cores_defect_zero(int n, int ell, bool alternating, CommandResult& r) {
    bool exists = alternating ? defect_zero_alt(n, ell) : defect_zero_sym(n, ell);
    r.payload = {{"n", n}, {"ell", ell},
                 {"group", alternating ? "alternating" : "symmetric"},
                 {"defect_zero_block_exists", exists}};
    r.table = {{"group", "n", "ell", "exists"},
               {alternating ? "alternating" : "symmetric", std::to_string(n),
                std::to_string(ell), exists ? "true" : "false"}};
}

void cmd_glblocks(int n, long long q, int ell, CommandResult& r) {
    auto blks = unipotent_blocks_gl(n, q, ell);
    json out = json::array();
    r.table.push_back({"core", "weight", "defect", "defect_group", "k"});
    bool warned = false;
    for (const GLBlockDescriptor& b : blks) {
        json members = json::array();
        for (const Partition& m : b.series.members) members.push_back(partition_json(m));
        json jb = {{"core", partition_json(b.series.cuspidal_core)},
                   {"weight", b.series.weight}, {"members", std::move(members)},
                   {"defect", b.defect_valuation},
                   {"defect_group", b.defect_group_label}};
        if (b.warning_small_ell) { jb["warning"] = "outside-theorem-hypotheses"; warned = true; }
        out.push_back(std::move(jb));
        r.table.push_back({b.series.cuspidal_core.to_string(),
                           std::to_string(b.series.weight),
                           std::to_string(b.defect_valuation), b.defect_group_label,
                           std::to_string(b.series.members.size())});
    }
    r.payload = {{"n", n}, {"q", q}, {"ell", ell},
                 {"d", blks.empty() ? mult_order(q, ell) : blks.front().d},
                 {"blocks", std::move(out)}};
    if (warned) {
        r.status = Status::warning;
        r.diagnostics.push_back("ell < 7: computed by the same combinatorics, "
                                "outside the classification hypotheses");
    }
}

void cmd_dseries(int n, int d, CommandResult& r) {
    json out = json::array();
    r.table.push_back({"core", "weight", "k"});
    for (const DSeries& s : d_series_partition(n, d)) {
        json members = json::array();
        for (const Partition& m : s.members) members.push_back(partition_json(m));
        out.push_back({{"core", partition_json(s.cuspidal_core)}, {"weight", s.weight},
                       {"members", std::move(members)},
                       {"levi_shape", {s.levi_fixed, s.levi_block, s.levi_copies}}});
        r.table.push_back({s.cuspidal_core.to_string(), std::to_string(s.weight),
                           std::to_string(s.members.size())});
    }
    r.payload = {{"n", n}, {"d", d}, {"series", std::move(out)}};
}

void cmd_weights(int n, long long q, CommandResult& r) {
    auto [ibr, alp] = alperin_weight_count(n, q);
    long long closed = q - 1;
    for (int i = 1; i < n; ++i) closed *= q;
    r.payload = {{"n", n}, {"q", q}, {"ibr", std::to_string(ibr)},
                 {"alp", std::to_string(alp)},
                 {"steinberg", std::to_string(steinberg_count(n, q))},
                 {"closed_form_check", ibr == closed && alp == closed}};
    r.table = {{"ibr", "alp", "steinberg", "closed_form_check"},
               {std::to_string(ibr), std::to_string(alp),
                std::to_string(steinberg_count(n, q)),
                (ibr == closed && alp == closed) ? "true" : "false"}};
}

void cmd_selftest(int max_n, CommandResult& r) {
    json out = json::array();
    r.table.push_back({"suite", "result", "detail"});
    bool all = true;
    for (const SelftestResult& s : run_selftest(max_n)) {
        out.push_back({{"suite", s.name}, {"passed", s.passed}, {"detail", s.detail}});
        r.table.push_back({s.name, s.passed ? "pass" : "fail", s.detail});
        if (!s.passed) {
            all = false;
            r.diagnostics.push_back(s.name + ": " + s.detail);
        }
    }
    r.payload = {{"max_n", max_n}, {"all_passed", all}, {"suites", std::move(out)}};
    if (!all) r.status = Status::error;
}

}  // namespace

CommandResult run(const std::vector<std::string>& argv) {
    CommandResult result;

    CLI::App app{"exact partition/block combinatorics toolkit"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "json, csv or plain")
        ->check(CLI::IsMember({"json", "csv", "plain"}));

    int n = 0, ell = 0, d = 0, nmax = 0, cycles = 0, max_n = 8;
    long long big_n = 0, q = 0;
    std::string lambda_s, mu_s, core_s;
    bool alternating = false;

    auto* chartable = app.add_subcommand("chartable")->fallthrough();
    chartable->add_option("N", n)->required();

    auto* mn = app.add_subcommand("mn")->fallthrough();
    mn->add_option("LAMBDA", lambda_s)->required();
    mn->add_option("MU", mu_s)->required();

    auto* blocks_cmd = app.add_subcommand("blocks")->fallthrough();
    blocks_cmd->add_option("N", n)->required();
    blocks_cmd->add_option("ELL", ell)->required();

    auto* idem = app.add_subcommand("idempotent")->fallthrough();
    idem->add_option("N", n)->required();
    idem->add_option("ELL", ell)->required();
    idem->add_option("CORE", core_s)->required();

    auto* brauer = app.add_subcommand("brauer")->fallthrough();
    brauer->add_option("N", n)->required();
    brauer->add_option("ELL", ell)->required();
    brauer->add_option("CORE", core_s)->required();
    brauer->add_option("CYCLES", cycles)->required();

    auto* cores = app.add_subcommand("cores")->fallthrough();
    cores->require_subcommand(1);
    auto* ccount = cores->add_subcommand("count")->fallthrough();
    ccount->add_option("D", d)->required();
    ccount->add_option("NMAX", nmax)->required();
    auto* ckiming = cores->add_subcommand("kiming")->fallthrough();
    ckiming->add_option("D", d)->required();
    ckiming->add_option("N", big_n)->required();
    auto* cdz = cores->add_subcommand("defect-zero")->fallthrough();
    cdz->add_option("N", n)->required();
    cdz->add_option("ELL", ell)->required();
    cdz->add_flag("--alternating", alternating);

    auto* glb = app.add_subcommand("glblocks")->fallthrough();
    glb->add_option("N", n)->required();
    glb->add_option("Q", q)->required();
    glb->add_option("ELL", ell)->required();

    auto* dser = app.add_subcommand("dseries")->fallthrough();
    dser->add_option("N", n)->required();
    dser->add_option("D", d)->required();

    auto* weights = app.add_subcommand("weights")->fallthrough();
    weights->add_option("N", n)->required();
    weights->add_option("Q", q)->required();

    auto* selftest = app.add_subcommand("selftest")->fallthrough();
    selftest->add_option("--max-n", max_n);

    try {
        std::vector<std::string> args(argv.rbegin(), argv.rend());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        result.status = Status::error;
        result.diagnostics.push_back("usage");
        std::ostringstream os;
        os << e.what() << "\n\n" << app.help();
        result.diagnostics.push_back(os.str());
        return result;
    }

    try {
        if (*chartable) cmd_chartable(n, result);
        else if (*mn) cmd_mn(lambda_s, mu_s, result);
        else if (*blocks_cmd) cmd_blocks(n, ell, result);
        else if (*idem) cmd_idempotent(n, ell, core_s, result);
        else if (*brauer) cmd_brauer(n, ell, core_s, cycles, result);
        else if (*ccount) cmd_cores_count(d, nmax, result);
        else if (*ckiming) cmd_cores_kiming(d, big_n, result);
        else if (*cdz) cmd_cores_defect_zero(n, ell, alternating, result);
        else if (*glb) cmd_glblocks(n, q, ell, result);
        else if (*dser) cmd_dseries(n, d, result);
        else if (*weights) cmd_weights(n, q, result);
        else if (*selftest) cmd_selftest(max_n, result);
    } catch (const std::exception& e) {
        result.status = Status::error;
        result.diagnostics.push_back(e.what());
    }
    result.format = format;
    return result;
}

bool is_usage_error(const CommandResult& r) {
    return !r.diagnostics.empty() && r.diagnostics.front() == "usage";
}

std::string render(const CommandResult& r, const std::string& format) {
    std::ostringstream os;
    if (format == "csv") {
        for (const auto& row : r.table) {
            for (size_t i = 0; i < row.size(); ++i) {
                if (i) os << ',';
                bool quote = row[i].find(',') != std::string::npos;
                if (quote) os << '"';
                os << row[i];
                if (quote) os << '"';
            }
            os << '\n';
        }
        return os.str();
    }
    if (format == "plain") {
        std::vector<size_t> width;
        for (const auto& row : r.table) {
            if (width.size() < row.size()) width.resize(row.size(), 0);
            for (size_t i = 0; i < row.size(); ++i)
                width[i] = std::max(width[i], row[i].size());
        }
        for (const auto& row : r.table) {
            for (size_t i = 0; i < row.size(); ++i) {
                if (i) os << "  ";
                os << row[i];
                if (i + 1 < row.size())
                    os << std::string(width[i] - row[i].size(), ' ');
            }
            os << '\n';
        }
        return os.str();
    }
    os << r.payload.dump(2) << '\n';
    return os.str();
}

}  // namespace coreblocks::cli
