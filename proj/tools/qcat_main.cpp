// qcat: exact q-Catalan / root-lattice toolkit.
//
// Every computation is exact integer arithmetic; identical invocations with
// identical budgets print byte-identical results on stdout (timings go to
// stderr or, under --json, into the wall_ms field).
//
// Exit codes: 0 verified/success, 1 counterexample found, 2 usage or input
// error, 3 budget or timeout.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "qcat/dyck.hpp"
#include "qcat/serialize.hpp"
#include "qcat/verify.hpp"
#include "qcat/weyl.hpp"

namespace fs = std::filesystem;
using namespace qcat;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct RunConfig {
    int jobs = 1;
    long long point_budget = kDefaultPointBudget;
    unsigned long long node_budget = kDefaultNodeBudget;
    bool json = false;
    bool no_cache = false;
    std::string cache_dir;
};

fs::path cache_root(const RunConfig& cfg) {
    if (!cfg.cache_dir.empty()) return cfg.cache_dir;
    if (const char* env = std::getenv("QCAT_CACHE_DIR")) return env;
    if (const char* home = std::getenv("HOME")) return fs::path(home) / ".cache" / "qcat";
    return fs::temp_directory_path() / "qcat-cache";
}

void print_verdict(const Verdict& v, const RunConfig& cfg) {
    if (cfg.json) {
        std::cout << to_json(v).dump() << "\n";
    } else {
        std::cout << v.claim << " " << v.params << ": " << Verdict::status_name(v.status) << "\n";
        if (!v.certificate.empty()) std::cout << "certificate: " << v.certificate << "\n";
        std::cerr << v.claim << " wall time " << v.wall_ms << " ms\n";
    }
}

int verdict_exit(const Verdict& v) {
    switch (v.status) {
        case Verdict::Status::Verified: return kExitOk;
        case Verdict::Status::Counterexample: return kExitCounterexample;
        case Verdict::Status::Timeout: return kExitBudget;
    }
    return kExitUsage;
}

JohnsonStatistic load_statistic(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw std::invalid_argument("cannot open statistic file " + file);
    json j;
    in >> j;
    return johnson_from_json(j);
}

std::vector<long long> parse_b_list(const std::string& spec) {
    std::vector<long long> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stoll(item));
    return out;
}

// ---- germs with the (a, c)-keyed JSON file cache ------------------------

GermTable germs_with_cache(int a, const RunConfig& cfg) {
    fs::path dir = cache_root(cfg) / "germs";
    auto key = [&](long long c) {
        return dir / ("a" + std::to_string(a) + "_c" + std::to_string(c) + ".json");
    };
    auto cs = coprime_upto(a, static_cast<long long>(a - 1) * (a - 1));
    if (!cfg.no_cache) {
        GermTable cached;
        cached.a = a;
        bool complete = true;
        for (long long c : cs) {
            std::ifstream in(key(c));
            if (!in) {
                complete = false;
                break;
            }
            json j;
            in >> j;
            cached.entries.emplace_back(c, laurent_from_json(j));
        }
        if (complete) return cached;
    }
    GermTable table = germ_table(a, cfg.jobs);
    if (!cfg.no_cache) {
        std::error_code ec;
        fs::create_directories(dir, ec);
        if (!ec)
            for (const auto& [c, g] : table.entries) {
                std::ofstream out(key(c));
                out << to_json(g).dump() << "\n";
            }
    }
    return table;
}

// ---- repro-paper golden suite --------------------------------------------

class Repro {
public:
    explicit Repro(const RunConfig& cfg) : cfg_(cfg) {}

    int run() {
        basics();
        catalan_values();
        germ_tables();
        lattice_facts();
        johnson_facts();
        dyck_facts();
        non_coprime_facts();
        weyl_facts();
        duality_fact();
        germ_positivity_20();
        std::cout << (failures_ == 0 ? "repro-paper: all " : "repro-paper: FAILURES ")
                  << checks_ << " checks" << (failures_ ? (", " + std::to_string(failures_) + " failed") : " passed")
                  << "\n";
        return failures_ == 0 ? kExitOk : kExitCounterexample;
    }

private:
    const RunConfig& cfg_;
    int checks_ = 0;
    int failures_ = 0;

    void check(const std::string& name, bool ok) {
        ++checks_;
        if (!ok) ++failures_;
        std::cout << (ok ? "ok " : "FAIL ") << name << "\n";
    }
    void check_poly(const std::string& name, const LaurentPoly& got, const std::string& expect) {
        check(name + " = " + expect, got.to_string() == expect);
    }

    void basics() {
        check_poly("qbinom(4,2)", q_binomial(4, 2), "1 + q + 2*q^2 + q^3 + q^4");
        check_poly("qbinom(7,2)", q_binomial(7, 2),
                   "1 + q + 2*q^2 + 2*q^3 + 3*q^4 + 3*q^5 + 3*q^6 + 2*q^7 + 2*q^8 + q^9 + q^10");
        check_poly("[3]_{q^2}", q_int(3).substitute_power(2), "1 + q^2 + q^4");
        check_poly("(q^2+q^3+q^4)/[3]_q", exact_div(LaurentPoly::from_terms({{2, 1}, {3, 1}, {4, 1}}), q_int(3)),
                   "q^2");
        // rearranged q-Catalan: Cat(a,b)_q prod_k (1-q^{ak}) ==
        // poch(b+1, a-1) * prod_{k=2}^{a-1} [a]_{q^k}
        for (int a : {3, 4, 5}) {
            long long b = a + 1;
            LaurentPoly lhs = cat_q(a, b);
            for (int k = 1; k < a; ++k)
                lhs *= LaurentPoly::one() - LaurentPoly::monomial(1, static_cast<long long>(a) * k);
            LaurentPoly rhs = q_pochhammer(b + 1, a - 1);
            for (int k = 2; k < a; ++k) rhs *= q_int(a).substitute_power(k);
            check("pochhammer rearrangement a=" + std::to_string(a), lhs == rhs);
        }
    }

    void catalan_values() {
        check("Cat(3,5) = 7", cat_count(3, 5) == 7);
        check("Cat(3,5)_q at q=1 is 7", cat_q(3, 5).eval_at_one() == 7);
        check_poly("Cat(3,1)_q", cat_q(3, 1), "1");
        check_poly("Cat(3,2)_q", cat_q(3, 2), "1 + q^2");
        check_poly("Cat(3,4)_q", cat_q(3, 4), "1 + q^2 + q^3 + q^4 + q^6");
        check_poly("Cat(3,5)_q", cat_q(3, 5), "1 + q^2 + q^3 + q^4 + q^5 + q^6 + q^8");
        check_poly("Cat(3,7)_q", cat_q(3, 7),
                   "1 + q^2 + q^3 + q^4 + q^5 + 2*q^6 + q^7 + q^8 + q^9 + q^10 + q^12");
        check_poly("Cat(5,2)_q", cat_q(5, 2), "1 + q^2 + q^4");
        check_poly("Cat(5,3)_q - Cat(5,2)_q", cat_q(5, 3) - cat_q(5, 2), "q^3 + q^5 + q^6 + q^8");
    }

    void germ_tables() {
        const std::vector<std::tuple<int, long long, std::string>> golden = {
            {3, 1, "1"}, {3, 2, "q^2"}, {3, 4, "q^4"},
            {4, 1, "1"}, {4, 3, "q^2 + q^3 + q^4 + q^6"},
            {4, 5, "q^5 + q^6 + q^7 + q^8 + q^9 + q^10"},
            {4, 7, "q^9 + q^11 + q^12 + q^13"}, {4, 9, "q^15"},
            {5, 1, "1"}, {5, 2, "q^2 + q^4"}, {5, 3, "q^3 + q^5 + q^6 + q^8"},
            {5, 4, "q^4 + q^6 + q^7 + q^8 + q^9 + q^10 + q^12"},
            {5, 6,
             "q^6 + q^7 + 2*q^8 + 2*q^9 + 2*q^10 + 3*q^11 + 3*q^12 + 2*q^13 + 3*q^14 + q^15 + "
             "2*q^16 + q^17 + q^18"},
            {5, 7,
             "q^10 + q^11 + q^12 + 2*q^13 + q^14 + 2*q^15 + 2*q^16 + q^17 + 2*q^18 + q^19 + "
             "q^20 + q^21"},
            {5, 8,
             "q^12 + 2*q^14 + q^15 + 2*q^16 + 2*q^17 + q^18 + 2*q^19 + 2*q^20 + q^21 + 2*q^22 + "
             "q^24"},
            {5, 9,
             "q^15 + q^16 + q^17 + 2*q^18 + q^19 + 2*q^20 + 2*q^21 + q^22 + 2*q^23 + q^24 + "
             "q^25 + q^26"},
            {5, 11,
             "q^18 + q^19 + 2*q^20 + q^21 + 3*q^22 + 2*q^23 + 3*q^24 + 3*q^25 + 2*q^26 + "
             "2*q^27 + 2*q^28 + q^29 + q^30"},
            {5, 12, "q^24 + q^26 + q^27 + q^28 + q^29 + q^30 + q^32"},
            {5, 13, "q^28 + q^30 + q^31 + q^33"},
            {5, 14, "q^32 + q^34"},
            {5, 16, "q^36"},
        };
        for (const auto& [a, c, expect] : golden)
            check_poly("germ(" + std::to_string(a) + ";" + std::to_string(c) + ")", germ(a, c),
                       expect);
        LaurentPoly sum3;
        for (const auto& [c, g] : germ_table(3).entries) sum3 += g;
        check_poly("germ sum a=3", sum3, "1 + q^2 + q^4");
        check("germ reconstruction at (3,7)", germ_reconstruction(3, 7) == cat_q(3, 7));
    }

    void lattice_facts() {
        check("T(w_i) = i (a=4)",
              tilted_height({1, 0, 0}) == 1 && tilted_height({0, 1, 0}) == 2 &&
                  tilted_height({0, 0, 1}) == 3);
        check("T(1,1,2) = 9", tilted_height({1, 1, 2}) == 9);
        check("(1,1) in R (a=3)", is_root_point(3, {1, 1}));
        check("(2,1,0) in R (a=4)", is_root_point(4, {2, 1, 0}));
        check("x in R iff x rem a in R",
              is_root_point(3, {4, -2}) == is_root_point(3, quo_rem_mod_a(3, {4, -2}).second));
        check("phi shifts T by b mod a", [&] {
            for (long long b : {4LL, 5LL, 7LL})
                for (const auto& p : enumerate(3, Region::simplex(b)))
                    if ((tilted_height(phi(b, p)) - tilted_height(p) - b) % 3 != 0) return false;
            return true;
        }());
        check("#(L cap 5Delta) = C(7,2) (a=3)", enumerate(3, Region::simplex(5)).size() == 21);
        check("(L cap bDelta)_q = qbinom", height_gen_poly(3, Region::simplex(5)) == q_binomial(7, 2));
        auto coset_gen = [&](int k) {
            std::map<long long, BigInt> acc;
            for_each_point(3, Region::simplex(5), [&](const Point& p) {
                if (coset_index(3, p) == k) acc[tilted_height(p)] += 1;
            });
            return LaurentPoly::from_terms(
                std::vector<LaurentPoly::Term>(acc.begin(), acc.end()));
        };
        check_poly("(R_0 cap 5Delta)_q", coset_gen(0), "1 + 2*q^3 + 3*q^6 + q^9");
        check_poly("(R_1 cap 5Delta)_q", coset_gen(1), "q + 3*q^4 + 2*q^7 + q^10");
        check_poly("(R_2 cap 5Delta)_q", coset_gen(2), "2*q^2 + 3*q^5 + 2*q^8");
    }

    void johnson_facts() {
        check("alcove vertices form a standard set", [&] {
            for (int a = 2; a <= 6; ++a) {
                std::vector<Point> vertices{Point(a - 1, 0)};
                for (int i = 0; i < a - 1; ++i) {
                    Point w(a - 1, 0);
                    w[static_cast<std::size_t>(i)] = 1;
                    vertices.push_back(w);
                }
                if (!is_standard_set(a, vertices)) return false;
            }
            return true;
        }());
        JohnsonStatistic j3 = build_johnson_via_greedy(3);
        check("unique a=3 statistic",
              j3.table == std::map<Point, long long>{{{0, 0}, 0}, {{1, 1}, 2}, {{2, 2}, 4}});
        check("Catalan property a=3, b in {1,2,4,5,7}", [&] {
            for (long long b : {1LL, 2LL, 4LL, 5LL, 7LL})
                if (!verify_catalan_property(j3, b, cfg_.point_budget)) return false;
            return true;
        }());
        check("coset decomposition a=3 (all coprime b <= 40)", [&] {
            for (long long b : coprime_upto(3, 40))
                if (!verify_coset_decomposition(j3, b)) return false;
            return true;
        }());
        check_poly("(R cap Box)_J (a=3)", j_gen_poly(j3, Region::rotated_box(7, 0)),
                   "1 + q^2 + q^4");
        check_poly("(R cap Box_7^1)_J (a=3)", j_gen_poly(j3, Region::rotated_box(7, 1)),
                   "q^5 + q^6 + q^7");
        check_poly("(R cap Box_7^2)_J (a=3)", j_gen_poly(j3, Region::rotated_box(7, 2)),
                   "q^8 + q^10 + q^12");
        check("Brion identity (3,7)", verify_brion(j3, 7));
        JohnsonStatistic j4 = a4_alcove_statistic();
        check("J(1,1,3) = 9 (a=4)", eval_j(j4, {1, 1, 3}) == 9);
        check("J(3,1,1) = 5, J(2,2,2) = 12 (a=4)",
              eval_j(j4, {3, 1, 1}) == 5 && eval_j(j4, {2, 2, 2}) == 12);
        check("a=4 alcove blocks are ribbons", [&] {
            for (const auto& b : a4_alcove_partition())
                if (!is_ribbon(4, b)) return false;
            return true;
        }());
        check("germ((4;7))_q from the alcove slice",
              j_gen_poly(j4, Region::box_slice(6, 7)).is_zero()
                  ? false
                  : [&] {
                        std::map<long long, BigInt> acc;
                        for (const auto& [p, v] : j4.table) {
                            long long s = coord_sum(p);
                            if (s > 5 && s <= 7) acc[v] += 1;
                        }
                        return LaurentPoly::from_terms(std::vector<LaurentPoly::Term>(
                                   acc.begin(), acc.end())) == germ(4, 7);
                    }());
        check("ribbon partitions unique for a=3", [&] {
            for (long long c : coprime_upto(3, 4)) {
                auto pts = enumerate(3, Region::box_slice(prev_coprime(3, c) + 1, c));
                auto r = count_ribbon_partitions(3, pts, cfg_.node_budget);
                if (r.status != RibbonSearchResult::Status::Counted || r.count != 1) return false;
            }
            return true;
        }());
        check("a=5 Box[2,2] has two ribbon partitions", [&] {
            auto pts = enumerate(5, Region::box_slice(2, 2));
            auto r = count_ribbon_partitions(5, pts, cfg_.node_budget);
            return r.status == RibbonSearchResult::Status::Counted && r.count == 2;
        }());
        check("a=5: every coprime slice has a ribbon partition", [&] {
            for (long long c : coprime_upto(5, 16)) {
                auto pts = enumerate(5, Region::box_slice(prev_coprime(5, c) + 1, c));
                auto r = ribbon_partition_search(5, pts, cfg_.node_budget);
                if (r.status != RibbonSearchResult::Status::Found) return false;
            }
            return true;
        }());
    }

    void dyck_facts() {
        check("Dyck(4,7) example word valid", is_valid_dyck(DyckPath{4, 7, "uurrurrrurr"}));
        check("#Dyck(3,5) = 7", enumerate_dyck(3, 5).size() == 7);
        DyckPath p = make_dyck(4, 7, "uurruurrrrr");
        check("area(P) = 5", area(p) == 5);
        check("sweep(P) = uruurrrurrr", sweep(p).word == "uruurrrurrr");
        check("area(sweep(P)) = 3", area(sweep(p)) == 3);
        std::map<long long, BigInt> acc;
        for (const auto& q : enumerate_dyck(3, 3)) acc[maj(q)] += 1;
        check_poly("maj generating function Dyck(3,3)",
                   LaurentPoly::from_terms(std::vector<LaurentPoly::Term>(acc.begin(), acc.end())),
                   "1 + q^2 + q^3 + q^4 + q^6");
        for (auto [a, b] : std::vector<std::pair<int, int>>{{3, 4}, {3, 5}, {4, 7}, {5, 6}}) {
            BiPoly qt = qt_catalan(a, b);
            std::string tag = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
            check("qt symmetry " + tag, qt.swap_vars() == qt);
            check("Cat(a,b)_{1,1} = Cat(a,b) " + tag, qt.eval_at_ones() == cat_count(a, b));
            check("q^{(a-1)(b-1)/2} Cat_{q,1/q} = Cat_q " + tag,
                  qt.specialize_t_to_inverse_q().shifted(
                      static_cast<long long>(a - 1) * (b - 1) / 2) == cat_q(a, b));
        }
    }

    void non_coprime_facts() {
        check("c_d(l) = mu(d) for gcd(d,l)=1",
              ramanujan_sum(6, 1) == 1 && ramanujan_sum(4, 1) == 0 && ramanujan_sum(5, 1) == -1);
        check("c_d(0) = phi(d)", ramanujan_sum(6, 0) == 2 && ramanujan_sum(12, 0) == 4);
        check("c_d periodic", ramanujan_sum(6, 4) == ramanujan_sum(6, 10));
        check_poly("Cat(3,3;0)_q", cat_q_k(3, 3, 0), "1 + q + q^2 + q^4");
        check_poly("Cat(3,6;0)_q", cat_q_k(3, 6, 0),
                   "1 + q + q^2 + 2*q^4 + q^5 + q^6 + q^7 + q^8 + q^10");
        check_poly("Cat(3,6;0)_q - Cat(3,3;0)_q", cat_q_k(3, 6, 0) - cat_q_k(3, 3, 0),
                   "q^4 + q^5 + q^6 + q^7 + q^8 + q^10");
        check_poly("Cat(3,3;1)_q", cat_q_k(3, 3, 1), "q + q^2 + q^4");
        check_poly("Cat(3,6;1)_q - Cat(3,3;1)_q", cat_q_k(3, 6, 1) - cat_q_k(3, 3, 1),
                   "q^4 + q^5 + q^6 + q^7 + q^8 + q^10");
        check("Hermite reciprocity (a,b <= 8)", [&] {
            for (long long a = 1; a <= 8; ++a)
                for (long long b = 1; b <= 8; ++b)
                    for (long long k = 0; k < std::lcm(a, b); ++k)
                        if (cat_count_k(a, b, k) != cat_count_k(b, a, k)) return false;
            return true;
        }());
    }

    void weyl_facts() {
        RootSystemData b2 = weyl_b2();
        check("B2 identities b in {1,3,5,7,9} incl. f(q)=1+q^2", [&] {
            for (long long b : {1LL, 3LL, 5LL, 7LL, 9LL})
                if (!verify_weyl(b2, b).ok()) return false;
            return true;
        }());
        RootSystemData g2 = weyl_g2();
        check("G2 identities b in {1,5,7,11}", [&] {
            for (long long b : {1LL, 5LL, 7LL, 11LL})
                if (!verify_weyl(g2, b).ok()) return false;
            return true;
        }());
    }

    void duality_fact() {
        DualityResult d = rank_level_duality(build_johnson_via_greedy(3), a4_alcove_statistic());
        const std::vector<std::tuple<Point, Point, long long>> expected = {
            {{0, 0}, {0, 0, 0}, 0}, {{1, 1}, {2, 1, 0}, 2}, {{3, 0}, {1, 0, 1}, 3},
            {{2, 2}, {0, 2, 0}, 4}, {{0, 3}, {0, 1, 2}, 6},
        };
        bool ok = d.ok && d.rows.size() == expected.size();
        for (std::size_t i = 0; ok && i < expected.size(); ++i)
            ok = d.rows[i].left == std::get<0>(expected[i]) &&
                 d.rows[i].right == std::get<1>(expected[i]) &&
                 d.rows[i].j == std::get<2>(expected[i]);
        check("rank-level duality table (3,4)", ok);
    }

    void germ_positivity_20() {
        for (int a = 2; a <= 20; ++a) {
            Verdict v = check_germ_positivity(a, cfg_.jobs);
            check("germ positivity a=" + std::to_string(a), v.ok());
        }
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact rational q-Catalan / root-lattice verification toolkit"};
    app.require_subcommand(1);

    RunConfig cfg;
    cfg.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    app.add_option("--jobs", cfg.jobs, "worker threads for sweeps")->check(CLI::PositiveNumber);
    app.add_option("--point-budget", cfg.point_budget, "enumeration point budget")
        ->check(CLI::PositiveNumber);
    app.add_option("--node-budget", cfg.node_budget, "search node budget")
        ->check(CLI::PositiveNumber);
    app.add_flag("--json", cfg.json, "JSON-lines output for verdicts");
    app.add_flag("--no-cache", cfg.no_cache, "bypass the result cache");
    app.add_option("--cache-dir", cfg.cache_dir, "cache directory (else $QCAT_CACHE_DIR)");

    // catq A B
    int catq_a = 0;
    long long catq_b = 0;
    auto* cmd_catq = app.add_subcommand("catq", "print the rational q-Catalan number Cat(A,B)_q");
    cmd_catq->add_option("A", catq_a)->required();
    cmd_catq->add_option("B", catq_b)->required();

    // germs A [--csv]
    int germs_a = 0;
    bool germs_csv = false;
    auto* cmd_germs = app.add_subcommand("germs", "print the q-Catalan germs for rank A");
    cmd_germs->add_option("A", germs_a)->required();
    cmd_germs->add_flag("--csv", germs_csv, "CSV output (a,c,polynomial)");

    // slice A M N
    int slice_a = 0;
    long long slice_m = 0, slice_n = 0;
    auto* cmd_slice =
        app.add_subcommand("slice", "height generating function of Box[M,N] and its [A]_q quotient");
    cmd_slice->add_option("A", slice_a)->required();
    cmd_slice->add_option("M", slice_m)->required();
    cmd_slice->add_option("N", slice_n)->required();

    // monotone A --max C
    int mono_a = 0;
    long long mono_max = 0;
    auto* cmd_mono = app.add_subcommand("monotone", "coprime monotonicity sweep");
    cmd_mono->add_option("A", mono_a)->required();
    cmd_mono->add_option("--max", mono_max, "largest c to sweep")->required();

    // monotone-nc A G K --max C  (omit G K or pass --all-gk for the full
    // sweep over every divisor g of A and every coset K; the long-run
    // reproduction is `monotone-nc 20 --all-gk --max 80` per rank)
    int nc_a = 0, nc_g = 0;
    long long nc_k = 0, nc_max = 0;
    bool nc_all = false;
    auto* cmd_nc = app.add_subcommand("monotone-nc", "non-coprime monotonicity sweep at fixed gcd");
    cmd_nc->add_option("A", nc_a)->required();
    auto* nc_g_opt = cmd_nc->add_option("G", nc_g);
    auto* nc_k_opt = cmd_nc->add_option("K", nc_k);
    cmd_nc->add_option("--max", nc_max, "largest c to sweep")->required();
    cmd_nc->add_flag("--all-gk", nc_all, "sweep every divisor g of A and every k in 0..A-1");

    // johnson greedy A [--out FILE] ; johnson verify FILE --b-list ...
    auto* cmd_johnson = app.add_subcommand("johnson", "Johnson statistics");
    cmd_johnson->require_subcommand(1);
    int jg_a = 0;
    std::string jg_out;
    auto* cmd_jg = cmd_johnson->add_subcommand("greedy", "build the greedy statistic for rank A");
    cmd_jg->add_option("A", jg_a)->required();
    cmd_jg->add_option("--out", jg_out, "write the statistic JSON to FILE");
    std::string jv_file, jv_blist;
    auto* cmd_jv = cmd_johnson->add_subcommand("verify", "verify the Catalan property of a statistic file");
    cmd_jv->add_option("FILE", jv_file)->required();
    cmd_jv->add_option("--b-list", jv_blist, "comma-separated dilations to check")->required();

    // ribbons A [C] [--count]
    int rib_a = 0;
    long long rib_c = -1;
    bool rib_count = false;
    auto* cmd_rib = app.add_subcommand("ribbons", "ribbon partition search on box slices");
    cmd_rib->add_option("A", rib_a)->required();
    cmd_rib->add_option("C", rib_c, "slice index (default: all coprime slices)");
    cmd_rib->add_flag("--count", rib_count, "count all ribbon partitions");
    auto* rib_budget_opt = cmd_rib->add_option("--budget", cfg.node_budget, "search node budget");
    (void)rib_budget_opt;

    // brion A B [--statistic FILE]
    int brion_a = 0;
    long long brion_b = 0;
    std::string brion_file;
    auto* cmd_brion = app.add_subcommand("brion", "verify the q-Brion identity at (A,B)");
    cmd_brion->add_option("A", brion_a)->required();
    cmd_brion->add_option("B", brion_b)->required();
    cmd_brion->add_option("--statistic", brion_file, "statistic JSON (default: canonical)");

    // lemma A [--m-range LO HI]
    int lemma_a = 0;
    std::vector<long long> lemma_range{-10, 30};
    auto* cmd_lemma = app.add_subcommand("lemma", "Pochhammer subset identity sweep for rank A");
    cmd_lemma->add_option("A", lemma_a)->required();
    cmd_lemma->add_option("--m-range", lemma_range, "LO HI bounds for the exponent m")
        ->expected(2);

    // dyck A B [--qt | --sweep WORD | --maj]
    int dyck_a = 0, dyck_b = 0;
    bool dyck_qt = false, dyck_maj = false;
    std::string dyck_sweep_word;
    auto* cmd_dyck = app.add_subcommand("dyck", "Dyck path statistics");
    cmd_dyck->add_option("A", dyck_a)->required();
    cmd_dyck->add_option("B", dyck_b)->required();
    cmd_dyck->add_flag("--qt", dyck_qt, "print Cat(A,B)_{q,t} and its specializations");
    cmd_dyck->add_option("--sweep", dyck_sweep_word, "sweep the given path word");
    cmd_dyck->add_flag("--maj", dyck_maj, "print the maj generating function (A == B)");

    // duality A B
    int dual_a = 0, dual_b = 0;
    auto* cmd_dual = app.add_subcommand("duality", "rank-level duality pairing");
    cmd_dual->add_option("A", dual_a)->required();
    cmd_dual->add_option("B", dual_b)->required();

    // weyl {b2|g2} B
    std::string weyl_sys;
    long long weyl_b = 0;
    auto* cmd_weyl = app.add_subcommand("weyl", "B2/G2 rational q-Catalan identities");
    cmd_weyl->add_option("SYSTEM", weyl_sys, "b2 or g2")->required();
    cmd_weyl->add_option("B", weyl_b)->required();

    auto* cmd_repro = app.add_subcommand("repro-paper", "run the full golden suite");
    (void)cmd_repro;

    // global flags remain valid after the subcommand name
    for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; })) {
        sc->fallthrough();
        for (CLI::App* nested : sc->get_subcommands([](const CLI::App*) { return true; }))
            nested->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) return app.exit(e);
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*cmd_catq) {
            std::cout << cat_q(catq_a, catq_b).to_string() << "\n";
            return kExitOk;
        }
        if (*cmd_germs) {
            GermTable table = germs_with_cache(germs_a, cfg);
            for (const auto& [c, g] : table.entries) {
                if (germs_csv)
                    std::cout << germs_a << "," << c << ",\"" << g.to_string() << "\"\n";
                else
                    std::cout << "c=" << c << "  " << g.to_string() << "\n";
            }
            return kExitOk;
        }
        if (*cmd_slice) {
            LaurentPoly gen = box_slice_gen(slice_a, slice_m, slice_n);
            std::cout << "(Box[" << slice_m << "," << slice_n << "])_q = " << gen.to_string()
                      << "\n";
            LaurentPoly rem;
            if (auto quot = try_exact_div(gen, q_int(slice_a), &rem)) {
                std::cout << "quotient by [" << slice_a << "]_q = " << quot->to_string() << "\n";
                return kExitOk;
            }
            std::cout << "NOT divisible by [" << slice_a << "]_q, remainder = " << rem.to_string()
                      << "\n";
            return kExitCounterexample;
        }
        if (*cmd_mono) {
            Verdict v = check_monotone(mono_a, mono_max);
            print_verdict(v, cfg);
            return verdict_exit(v);
        }
        if (*cmd_nc) {
            if (!nc_all && nc_g_opt->count() && nc_k_opt->count()) {
                Verdict v = check_monotone_nonco(nc_a, nc_g, nc_k, nc_max);
                print_verdict(v, cfg);
                return verdict_exit(v);
            }
            if (!nc_all && (nc_g_opt->count() || nc_k_opt->count()))
                throw std::invalid_argument("monotone-nc: give both G and K, or neither");
            int exit_code = kExitOk;
            for (int g = 1; g <= nc_a; ++g) {
                if (nc_a % g != 0) continue;
                for (long long k = 0; k < nc_a; ++k) {
                    Verdict v = check_monotone_nonco(nc_a, g, k, nc_max);
                    print_verdict(v, cfg);
                    exit_code = std::max(exit_code, verdict_exit(v));
                }
            }
            return exit_code;
        }
        if (*cmd_jg) {
            JohnsonStatistic J = build_johnson_via_greedy(jg_a, cfg.point_budget);
            json j = to_json(J);
            if (jg_out.empty()) {
                std::cout << j.dump(2) << "\n";
            } else {
                std::ofstream out(jg_out);
                out << j.dump(2) << "\n";
                std::cout << "wrote statistic for a=" << jg_a << " (" << J.table.size()
                          << " entries) to " << jg_out << "\n";
            }
            return kExitOk;
        }
        if (*cmd_jv) {
            JohnsonStatistic J = load_statistic(jv_file);
            bool all = true;
            for (long long b : parse_b_list(jv_blist)) {
                bool ok = verify_coset_decomposition(J, b);
                all = all && ok;
                std::cout << "b=" << b << " " << (ok ? "verified" : "COUNTEREXAMPLE") << "\n";
            }
            return all ? kExitOk : kExitCounterexample;
        }
        if (*cmd_rib) {
            std::vector<long long> slices;
            if (rib_c >= 0)
                slices.push_back(rib_c);
            else
                slices = coprime_upto(rib_a, static_cast<long long>(rib_a - 1) * (rib_a - 1));
            bool timeout = false, not_found = false;
            for (long long c : slices) {
                auto pts =
                    enumerate(rib_a, Region::box_slice(prev_coprime(rib_a, c) + 1, c),
                              cfg.point_budget);
                if (rib_count) {
                    auto r = count_ribbon_partitions(rib_a, pts, cfg.node_budget);
                    if (r.status == RibbonSearchResult::Status::Timeout) {
                        std::cout << "c=" << c << " timeout after " << r.nodes << " nodes\n";
                        timeout = true;
                    } else if (rib_c >= 0) {
                        std::cout << r.count.str() << "\n";
                    } else {
                        std::cout << "c=" << c << " count=" << r.count.str() << "\n";
                    }
                } else {
                    auto r = ribbon_partition_search(rib_a, pts, cfg.node_budget);
                    if (r.status == RibbonSearchResult::Status::Timeout) {
                        std::cout << "c=" << c << " timeout after " << r.nodes << " nodes\n";
                        timeout = true;
                    } else if (r.status == RibbonSearchResult::Status::NotFound) {
                        std::cout << "c=" << c << " NO ribbon partition (exhaustive)\n";
                        not_found = true;
                    } else if (cfg.json) {
                        std::cout << json{{"a", rib_a}, {"c", c},
                                          {"partition", to_json(r.partition)}}
                                         .dump()
                                  << "\n";
                    } else {
                        std::cout << "c=" << c << " ribbon partition found:\n"
                                  << render_partition(rib_a, r.partition);
                    }
                }
            }
            if (timeout) return kExitBudget;
            return not_found ? kExitCounterexample : kExitOk;
        }
        if (*cmd_brion) {
            JohnsonStatistic J =
                brion_file.empty() ? canonical_statistic(brion_a, cfg.point_budget)
                                   : load_statistic(brion_file);
            if (J.a != brion_a) throw std::invalid_argument("statistic rank does not match A");
            bool ok = verify_brion(J, brion_b, cfg.point_budget);
            std::cout << "brion a=" << brion_a << " b=" << brion_b << ": "
                      << (ok ? "verified" : "COUNTEREXAMPLE") << "\n";
            return ok ? kExitOk : kExitCounterexample;
        }
        if (*cmd_lemma) {
            bool all = true;
            for (int i = 0; i < lemma_a; ++i)
                for (long long m = lemma_range[0]; m <= lemma_range[1]; ++m)
                    if (!lemma_pochhammer_identity(lemma_a, i, m)) {
                        std::cout << "FAIL at i=" << i << " m=" << m << "\n";
                        all = false;
                    }
            std::cout << "lemma a=" << lemma_a << " m in [" << lemma_range[0] << ","
                      << lemma_range[1] << "]: " << (all ? "verified" : "counterexample") << "\n";
            return all ? kExitOk : kExitCounterexample;
        }
        if (*cmd_dyck) {
            if (!dyck_sweep_word.empty()) {
                DyckPath p = make_dyck(dyck_a, dyck_b, dyck_sweep_word);
                DyckPath s = sweep(p);
                std::cout << s.word << "\n";
                std::cout << "area " << area(p) << " -> " << area(s) << "\n";
                return kExitOk;
            }
            if (dyck_maj) {
                std::map<long long, BigInt> acc;
                for (const auto& p : enumerate_dyck(dyck_a, dyck_b, cfg.point_budget))
                    acc[maj(p)] += 1;
                std::cout << LaurentPoly::from_terms(
                                 std::vector<LaurentPoly::Term>(acc.begin(), acc.end()))
                                 .to_string()
                          << "\n";
                return kExitOk;
            }
            if (dyck_qt) {
                BiPoly qt = qt_catalan(dyck_a, dyck_b, cfg.point_budget);
                std::cout << "Cat(q,t) = " << qt.to_string() << "\n";
                bool sym = qt.swap_vars() == qt;
                bool spec = qt.specialize_t_to_inverse_q().shifted(
                                static_cast<long long>(dyck_a - 1) * (dyck_b - 1) / 2) ==
                            cat_q(dyck_a, dyck_b);
                std::cout << "qt-symmetry " << (sym ? "verified" : "COUNTEREXAMPLE")
                          << ", t=1/q specialization " << (spec ? "verified" : "COUNTEREXAMPLE")
                          << "\n";
                return sym && spec ? kExitOk : kExitCounterexample;
            }
            std::cout << enumerate_dyck(dyck_a, dyck_b, cfg.point_budget).size() << "\n";
            return kExitOk;
        }
        if (*cmd_dual) {
            DualityResult d = rank_level_duality(canonical_statistic(dual_a, cfg.point_budget),
                                                 canonical_statistic(dual_b, cfg.point_budget),
                                                 cfg.point_budget);
            if (!d.ok) {
                std::cout << "MISMATCH: " << d.mismatch << "\n";
                return kExitCounterexample;
            }
            for (const auto& row : d.rows)
                std::cout << point_str(row.left) << " <-> " << point_str(row.right)
                          << "  J=" << row.j << "\n";
            return kExitOk;
        }
        if (*cmd_weyl) {
            RootSystemData sys;
            if (weyl_sys == "b2")
                sys = weyl_b2();
            else if (weyl_sys == "g2")
                sys = weyl_g2();
            else
                throw std::invalid_argument("unknown system " + weyl_sys + " (expected b2 or g2)");
            WeylReport rep = verify_weyl(sys, weyl_b);
            std::cout << "Cat(" << sys.name << "," << weyl_b
                      << ")_q = " << weyl_cat_q(sys, weyl_b).to_string() << "\n";
            std::cout << "height generating function: "
                      << (rep.heights_match ? "verified" : "COUNTEREXAMPLE") << "\n";
            std::cout << "counting formulas: " << (rep.counts_match ? "verified" : "COUNTEREXAMPLE")
                      << "\n";
            if (rep.f_q_divides) std::cout << "f(q) = " << rep.f_q.to_string() << "\n";
            if (rep.fq_checked)
                std::cout << "f(q) relation: " << (rep.fq_match ? "verified" : "COUNTEREXAMPLE")
                          << "\n";
            return rep.ok() ? kExitOk : kExitCounterexample;
        }
        if (*cmd_repro) {
            return Repro(cfg).run();
        }
    } catch (const NotDivisible& e) {
        std::cout << "COUNTEREXAMPLE (divisibility): " << e.what() << "\n";
        return kExitCounterexample;
    } catch (const StuckGreedy& e) {
        std::cout << "COUNTEREXAMPLE (greedy stuck): " << e.what() << "\n";
        return kExitCounterexample;
    } catch (const ResourceLimit& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
