// Command-line front end over the roundtable library: single values, range
// sweeps, the stable-vs-greedy comparison table, preference diagrams, and
// seeded simulations.
//
// Exit codes: 0 success, 2 usage error, 3 resource cap, 4 cross-validation
// mismatch. Output is byte-stable apart from the timestamp header, which
// --no-meta removes; rows are buffered and flushed only on success, so a
// failing command never leaves a partial file behind.

#include <CLI11.hpp>

#include "roundtable/roundtable.hpp"

#include <chrono>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace {

using namespace roundtable;

struct CheckMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string format = "csv";
    std::string output;
    std::uint64_t seed = 1;
    std::int64_t samples = 100000;
    int enum_cap = kDefaultEnumCap;
    int threads = 0;
    bool no_meta = false;
    bool check = false;
};

std::string utc_now() {
    const std::time_t t =
        std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void write_text(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::invalid_argument("cannot open output file: " + path);
    f << text;
}

class Emitter {
  public:
    Emitter(const Options& opt, std::string csv_header)
        : opt_(opt), header_(std::move(csv_header)) {}

    void row(std::string csv, nlohmann::json j) {
        csv_rows_.push_back(std::move(csv));
        json_rows_.push_back(std::move(j));
    }

    void flush(bool single_object) {
        std::string text;
        if (opt_.format == "json") {
            if (single_object && json_rows_.size() == 1)
                text = json_rows_.front().dump(2) + "\n";
            else
                text = json_rows_.dump(2) + "\n";
        } else {
            if (!opt_.no_meta) text += "# generated " + utc_now() + "\n";
            if (!header_.empty()) text += header_ + "\n";
            for (const std::string& r : csv_rows_) text += r + "\n";
        }
        write_text(text, opt_.output);
    }

  private:
    Options opt_;
    std::string header_;
    std::vector<std::string> csv_rows_;
    nlohmann::json json_rows_ = nlohmann::json::array();
};

bool is_greedy_quantity(const std::string& q) { return q.rfind("greedy_", 0) == 0; }

void require_quantity(const std::string& q) {
    static const std::set<std::string> known{"f", "g", "greedy_expected", "greedy_per_person",
                                             "greedy_perfect"};
    if (!known.count(q)) throw std::invalid_argument("unknown quantity: " + q);
}

std::string default_method(const std::string& q) {
    return is_greedy_quantity(q) ? "recursion" : "closed_form";
}

void require_method(const std::string& q, const std::string& m) {
    const bool ok = is_greedy_quantity(q)
                        ? (m == "recursion" || m == "montecarlo")
                        : (m == "closed_form" || m == "enumeration" || m == "montecarlo");
    if (!ok) throw std::invalid_argument("method " + m + " does not apply to quantity " + q);
}

std::vector<std::string> split_methods(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    if (out.empty()) throw std::invalid_argument("no methods given");
    return out;
}

SweepRow compute_row(const std::string& q, int n, const std::string& method,
                     const Options& opt) {
    SweepRow r;
    r.n = n;
    r.quantity = q;
    r.method = method;
    if (method == "closed_form") {
        r.exact = q == "f" ? unmatched_probability(n) : all_matched_probability(n);
    } else if (method == "enumeration") {
        r.exact = q == "f" ? enumerate_unmatched_probability(n, opt.enum_cap, opt.threads)
                           : enumerate_all_matched_probability(n, opt.enum_cap, opt.threads);
    } else if (method == "recursion") {
        if (q == "greedy_expected")
            r.exact = cycle_expected_unmatched(n);
        else if (q == "greedy_per_person")
            r.exact = cycle_expected_unmatched(n) / n;
        else
            r.exact = cycle_perfect_probability(n, /*allow_odd=*/true);
    } else {
        r.samples = opt.samples;
        r.seed = opt.seed;
        if (q == "f") {
            r.value = sample_unmatched_probability(n, opt.seed, opt.samples, opt.threads).estimate;
        } else if (q == "g") {
            r.value =
                sample_all_matched_probability(n, opt.seed, opt.samples, opt.threads).estimate;
        } else {
            const GreedySimStats st = simulate_greedy_cycle(n, opt.seed, opt.samples, opt.threads);
            r.value = q == "greedy_expected"     ? st.mean_unmatched
                      : q == "greedy_per_person" ? st.per_person_unmatched
                                                 : st.perfect_fraction;
        }
        return r;
    }
    r.value = to_double(*r.exact);
    return r;
}

// --check: closed form and enumeration must agree exactly. Applies to f and g
// for sizes within the enumeration cap; larger sizes pass through unchecked.
void cross_validate(const std::string& q, int n, const Options& opt) {
    if (is_greedy_quantity(q))
        throw std::invalid_argument("--check cross-validates f and g only");
    if (n > opt.enum_cap) return;
    const Rational closed = q == "f" ? unmatched_probability(n) : all_matched_probability(n);
    const Rational enumerated = q == "f"
                                    ? enumerate_unmatched_probability(n, opt.enum_cap, opt.threads)
                                    : enumerate_all_matched_probability(n, opt.enum_cap, opt.threads);
    if (closed != enumerated)
        throw CheckMismatch("cross-validation mismatch at n=" + std::to_string(n) + " for " + q);
}

int cmd_value(const std::string& q, int n, std::string method, const Options& opt) {
    require_quantity(q);
    if (method.empty()) method = default_method(q);
    require_method(q, method);
    if (opt.check) cross_validate(q, n, opt);
    const SweepRow r = compute_row(q, n, method, opt);
    Options bare = opt;
    bare.no_meta = true;  // a single-value query prints just the row
    Emitter out(bare, "");
    out.row(to_csv(r), to_json(r));
    out.flush(true);
    return 0;
}

int cmd_sweep(const std::string& q, int lo, int hi, const std::string& methods_csv,
              bool even_only, const Options& opt) {
    require_quantity(q);
    if (lo < 1 || lo > hi) throw std::invalid_argument("sweep needs 1 <= lo <= hi");
    const std::vector<std::string> methods =
        split_methods(methods_csv.empty() ? default_method(q) : methods_csv);
    for (const std::string& m : methods) require_method(q, m);
    Emitter out(opt, kSweepCsvHeader);
    for (int n = lo; n <= hi; ++n) {
        if (even_only && n % 2 != 0) continue;
        if (opt.check) cross_validate(q, n, opt);
        for (const std::string& m : methods) {
            const SweepRow r = compute_row(q, n, m, opt);
            out.row(to_csv(r), to_json(r));
        }
    }
    out.flush(false);
    return 0;
}

int cmd_compare(int lo, int hi, const Options& opt) {
    if (lo < 3 || lo > hi) throw std::invalid_argument("compare needs 3 <= lo <= hi");
    const GreedyTable table(hi - 2);
    Emitter out(opt, "n,stable_exact,stable_float,greedy_exact,greedy_float,difference");
    for (int n = lo; n <= hi; ++n) {
        const Rational stable = unmatched_probability(n);
        const Rational greedy = table.cycle_expected_unmatched(n) / n;
        const double diff = to_double(greedy) - to_double(stable);
        out.row(std::to_string(n) + ',' + to_fraction_string(stable) + ',' +
                    format_float12(to_double(stable)) + ',' + to_fraction_string(greedy) + ',' +
                    format_float12(to_double(greedy)) + ',' + format_float12(diff),
                nlohmann::json{{"n", n},
                               {"stable_exact", to_fraction_string(stable)},
                               {"stable_float", to_double(stable)},
                               {"greedy_exact", to_fraction_string(greedy)},
                               {"greedy_float", to_double(greedy)},
                               {"difference", diff}});
    }
    const Limits lim = limits();
    const double diff = lim.greedy_unmatched - lim.stable_unmatched;
    out.row("limit,1/9," + format_float12(lim.stable_unmatched) + ",NA," +
                format_float12(lim.greedy_unmatched) + ',' + format_float12(diff),
            nlohmann::json{{"n", "limit"},
                           {"stable_exact", "1/9"},
                           {"stable_float", lim.stable_unmatched},
                           {"greedy_exact", nullptr},
                           {"greedy_float", lim.greedy_unmatched},
                           {"difference", diff}});
    out.flush(false);
    return 0;
}

const char* zone2_name(Zone2 z) {
    switch (z) {
        case Zone2::Empty: return "empty";
        case Zone2::SingleL: return "single L";
        case Zone2::SingleR: return "single R";
        case Zone2::PairLR: return "pair LR";
    }
    return "?";
}

int cmd_show(const std::string& prefs_str, const Options& opt) {
    const Preferences p = Preferences::parse(prefs_str);
    std::ostringstream os;
    os << "preferences " << p.str() << " (n=" << p.n << ", "
       << (is_regular(p) ? "regular" : "irregular") << ")\n";
    os << "diagram:";
    for (int i = 0; i < p.n; ++i) {
        if (p.prefers_right(i))
            os << ' ' << i << "->";
        else
            os << " <-" << i;
    }
    os << "\n";
    const auto pairs = natural_pairs(p);
    os << "natural pairs:";
    if (pairs.empty()) os << " none";
    for (const auto& [a, b] : pairs) os << " (" << a << ',' << b << ')';
    os << "\n";
    if (is_regular(p)) {
        for (const Stretch& s : zone_decomposition(p).stretches) {
            os << "stretch after (" << s.opening_pair << ',' << (s.opening_pair + 1) % p.n
               << "):";
            if (s.length == 0) {
                os << " empty\n";
                continue;
            }
            os << " seats " << s.begin << ".." << (s.begin + s.length - 1) % p.n << ", zone1="
               << s.zone1_len << ", zone2=" << zone2_name(s.zone2) << ", zone3=" << s.zone3_len
               << "\n";
        }
    }
    const StableOutcome so = stable_set(p);
    switch (so.tag) {
        case StableTag::UniqueStable: {
            os << "outcome: unique stable matching\n";
            const Matching& m = so.matchings.front();
            os << "matching: " << m.str() << "\n";
            const std::vector<int> alone = m.unmatched_seats();
            if (alone.empty()) {
                os << "unmatched: none\n";
            } else {
                os << "unmatched:";
                for (int seat : alone)
                    os << " seat " << seat << " (s=" << left_distance(p, seat)
                       << ", t=" << right_distance(p, seat) << ")";
                os << "\n";
            }
            break;
        }
        case StableTag::TwoPerfect:
            os << "outcome: two stable matchings (irregular, even n)\n";
            os << "matching: " << so.matchings[0].str() << "\n";
            os << "matching: " << so.matchings[1].str() << "\n";
            os << "unmatched: none\n";
            break;
        case StableTag::NoStable:
            os << "outcome: no stable matching (irregular, odd n)\n";
            break;
    }
    write_text(os.str(), opt.output);
    return 0;
}

int cmd_simulate(const std::string& q, int n, const Options& opt) {
    Emitter out(opt, kSampleCsvHeader);
    if (q == "f" || q == "g") {
        const SampleStats st =
            q == "f" ? sample_unmatched_probability(n, opt.seed, opt.samples, opt.threads)
                     : sample_all_matched_probability(n, opt.seed, opt.samples, opt.threads);
        out.row(to_csv(st), to_json(st));
    } else if (q == "greedy") {
        for (const SampleStats& st :
             as_sample_rows(simulate_greedy_cycle(n, opt.seed, opt.samples, opt.threads)))
            out.row(to_csv(st), to_json(st));
    } else {
        throw std::invalid_argument("simulate quantity must be f, g, or greedy");
    }
    out.flush(false);
    return 0;
}

int run(int argc, char** argv) {
    CLI::App app{"stable pairings around a round table: exact values, sweeps, simulations"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--seed", opt.seed, "master seed for sampled methods")->capture_default_str();
    app.add_option("--samples", opt.samples, "sample count for sampled methods")
        ->capture_default_str();
    app.add_option("--enum-cap", opt.enum_cap, "largest n exhaustive enumeration may attempt")
        ->capture_default_str();
    app.add_option("--threads", opt.threads, "worker threads, 0 = auto")->capture_default_str();
    app.add_flag("--check", opt.check, "cross-validate closed form against enumeration");
    app.add_flag("--no-meta", opt.no_meta, "omit the timestamp header line");
    app.add_option("--output", opt.output, "write to this file instead of stdout");

    std::string value_q, value_method;
    int value_n = 0;
    CLI::App* value = app.add_subcommand("value", "print one quantity for one table size");
    value->fallthrough();
    value->add_option("quantity", value_q,
                      "f | g | greedy_expected | greedy_per_person | greedy_perfect")
        ->required();
    value->add_option("n", value_n, "table size")->required();
    value->add_option("--method", value_method,
                      "closed_form | enumeration | recursion | montecarlo");

    std::string sweep_q, sweep_methods;
    int sweep_lo = 0, sweep_hi = 0;
    bool sweep_even_only = false;
    CLI::App* sweep = app.add_subcommand("sweep", "print one row per table size in a range");
    sweep->fallthrough();
    sweep->add_option("quantity", sweep_q, "as for value")->required();
    sweep->add_option("lo", sweep_lo, "first table size")->required();
    sweep->add_option("hi", sweep_hi, "last table size")->required();
    sweep->add_option("--methods", sweep_methods, "comma-separated method list");
    sweep->add_flag("--even-only", sweep_even_only, "emit even table sizes only");

    int compare_lo = 0, compare_hi = 0;
    CLI::App* compare =
        app.add_subcommand("compare", "stable vs greedy unmatched probability, with limits");
    compare->fallthrough();
    compare->add_option("lo", compare_lo, "first table size (>= 3)")->required();
    compare->add_option("hi", compare_hi, "last table size")->required();

    std::string show_prefs;
    CLI::App* show = app.add_subcommand("show", "diagram one preference string");
    show->fallthrough();
    show->add_option("prefs", show_prefs, "string over {L,R}, seat 0 first")->required();

    std::string sim_q;
    int sim_n = 0;
    CLI::App* simulate = app.add_subcommand("simulate", "sampled estimate with standard error");
    simulate->fallthrough();
    simulate->add_option("quantity", sim_q, "f | g | greedy")->required();
    simulate->add_option("n", sim_n, "table size")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    if (value->parsed()) return cmd_value(value_q, value_n, value_method, opt);
    if (sweep->parsed()) return cmd_sweep(sweep_q, sweep_lo, sweep_hi, sweep_methods,
                                          sweep_even_only, opt);
    if (compare->parsed()) return cmd_compare(compare_lo, compare_hi, opt);
    if (show->parsed()) return cmd_show(show_prefs, opt);
    if (simulate->parsed()) return cmd_simulate(sim_q, sim_n, opt);
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CheckMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
