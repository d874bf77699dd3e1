#include "torusband/cli.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <limits>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "torusband/contfrac.hpp"
#include "torusband/floer.hpp"
#include "torusband/torus_knot.hpp"

namespace torusband::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json knot_json(const TorusKnot& k) {
    if (k.is_unknot()) return ordered_json("unknot");
    return ordered_json{k.p(), k.q()};
}

ordered_json step_json(const PinchStep& st) {
    ordered_json j;
    j["source"] = knot_json(st.source);
    j["t"] = st.t;
    j["h"] = st.h;
    j["r"] = st.r;
    j["s"] = st.s;
    j["sign_p_minus_2t"] = st.sign_p_minus_2t();
    j["target"] = knot_json(st.target);
    return j;
}

ordered_json cf_json(const ContinuedFraction& cf, const std::optional<Rational>& value) {
    ordered_json j;
    j["a0"] = cf.a0;
    auto terms = ordered_json::array();
    for (const CFTerm& t : cf.terms) terms.push_back(ordered_json{t.sign, t.value});
    j["terms"] = std::move(terms);
    j["nested"] = to_nested_string(cf);
    j["value"] = value ? ordered_json(value->to_string()) : ordered_json(nullptr);
    return j;
}

ordered_json dataset_json(const PinchDataSet& ds, const PinchSequence& seq) {
    ordered_json j;
    j["n"] = ds.n;
    j["q0"] = ds.q0;
    j["p1"] = ds.p1;
    j["eps"] = ds.eps;
    j["m"] = ds.m;
    // Sign(p-2t) per stage, indexed like eps (stage 1 is the final pinch).
    std::vector<int> signs;
    for (auto it = seq.steps.rbegin(); it != seq.steps.rend(); ++it)
        signs.push_back(it->sign_p_minus_2t());
    j["sign_p_minus_2t"] = signs;
    return j;
}

ordered_json alexander_json(const TorusKnot& k, const AlexanderData& ad) {
    ordered_json j;
    j["knot"] = knot_json(k);
    j["exponents"] = ad.exponents;
    std::vector<int> signs;
    for (const Int e : ad.exponents) signs.push_back(ad.poly.coeff(e) > 0 ? 1 : -1);
    j["signs"] = signs;
    j["genus"] = ad.genus;
    return j;
}

ordered_json hfk_json(const TorusKnot& k, const HFKPrime& h) {
    ordered_json j;
    j["knot"] = knot_json(k);
    j["free_rank"] = h.free_rank;
    j["torsion_exponents"] = h.torsion_exponents;
    j["ord"] = h.ord;
    return j;
}

std::string sign_list_text(const std::vector<int>& signs) {
    std::string out = "[";
    for (std::size_t i = 0; i < signs.size(); ++i) {
        if (i) out += ", ";
        out += signs[i] >= 0 ? "+" : "-";
        out += "1";
    }
    return out + "]";
}

template <typename T>
std::string int_list_text(const std::vector<T>& xs) {
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(xs[i]);
    }
    return out + "]";
}

std::string step_text(const PinchStep& st) {
    return st.source.to_string() + " -> " + st.target.to_string() + " (t=" + std::to_string(st.t) +
           ", h=" + std::to_string(st.h) + ", r=" + std::to_string(st.r) +
           ", s=" + std::to_string(st.s) + ")";
}

std::string sequence_arrow_text(const TorusKnot& k, const PinchSequence& seq) {
    std::string out = k.to_string();
    for (const PinchStep& st : seq.steps) out += " -> " + st.target.to_string();
    return out;
}

std::string cf_terms_text(const ContinuedFraction& cf) {
    std::string out = "[";
    for (std::size_t i = 0; i < cf.terms.size(); ++i) {
        if (i) out += ", ";
        out += "(" + std::string(cf.terms[i].sign > 0 ? "+1" : "-1") + "," +
               std::to_string(cf.terms[i].value) + ")";
    }
    return out + "]";
}

void emit(std::ostream& out, Format fmt, const ordered_json& j, const std::string& text) {
    if (fmt == Format::json)
        out << j.dump() << "\n";
    else
        out << text;
}

int cmd_pinch(const TorusKnot& k, const RunConfig& cfg, std::ostream& out) {
    const PinchStep st = pinch(k);
    ordered_json j;
    j["source"] = knot_json(st.source);
    j["t"] = st.t;
    j["h"] = st.h;
    j["target"] = knot_json(st.target);
    emit(out, cfg.format, j, step_text(st) + "\n");
    return 0;
}

int cmd_sequence(const TorusKnot& k, const RunConfig& cfg, std::ostream& out) {
    const PinchSequence seq = pinch_sequence(k);
    ordered_json j;
    j["knot"] = knot_json(k);
    auto steps = ordered_json::array();
    for (const PinchStep& st : seq.steps) steps.push_back(step_json(st));
    j["steps"] = std::move(steps);
    j["pinch_number"] = seq.pinch_number();

    std::string text;
    for (const PinchStep& st : seq.steps) text += step_text(st) + "\n";
    text += "pinch number: " + std::to_string(seq.pinch_number()) + "\n";
    emit(out, cfg.format, j, text);
    return 0;
}

int cmd_cf(const TorusKnot& k, const RunConfig& cfg, std::ostream& out) {
    const ContinuedFraction cf = cf_of_knot(k);
    const Rational value = eval_cf(cf);
    const std::string text = value.to_string() + " = " + to_nested_string(cf) + "\n" +
                             "a0: " + std::to_string(cf.a0) + "\n" +
                             "terms: " + cf_terms_text(cf) + "\n";
    emit(out, cfg.format, cf_json(cf, value), text);
    return 0;
}

int cmd_dataset(const TorusKnot& k, const RunConfig& cfg, std::ostream& out) {
    const PinchDataSet ds = extract_dataset(k);
    const PinchSequence seq = pinch_sequence(k);
    std::vector<int> signs;
    for (auto it = seq.steps.rbegin(); it != seq.steps.rend(); ++it)
        signs.push_back(it->sign_p_minus_2t());
    const std::string text = "n: " + std::to_string(ds.n) + "\n" +
                             "q0: " + std::to_string(ds.q0) + "\n" +
                             "p1: " + std::to_string(ds.p1) + "\n" +
                             "eps: " + sign_list_text(ds.eps) + "\n" +
                             "m: " + int_list_text(ds.m) + "\n" +
                             "sign(p-2t): " + sign_list_text(signs) + "\n";
    emit(out, cfg.format, dataset_json(ds, seq), text);
    return 0;
}

int cmd_alexander(const TorusKnot& k, const RunConfig& cfg, std::ostream& out) {
    const AlexanderData ad = alexander(k);
    const std::string text = "delta: " + ad.poly.to_string() + "\n" +
                             "genus: " + std::to_string(ad.genus) + "\n";
    emit(out, cfg.format, alexander_json(k, ad), text);
    return 0;
}

int cmd_staircase(const TorusKnot& k, const RunConfig& cfg, std::ostream& out) {
    const Staircase st = staircase(k);
    ordered_json j;
    j["knot"] = knot_json(k);
    j["steps"] = st.steps;
    j["N"] = st.N();
    const std::string text = "steps: " + int_list_text(st.steps) + "\n" +
                             "N: " + std::to_string(st.N()) + "\n";
    emit(out, cfg.format, j, text);
    return 0;
}

int cmd_hfk(const TorusKnot& k, const RunConfig& cfg, std::ostream& out) {
    const HFKPrime h = hfk_prime(k);
    const std::string text = "free rank: " + std::to_string(h.free_rank) + "\n" +
                             "torsion exponents: " + int_list_text(h.torsion_exponents) + "\n" +
                             "torsion order: " + std::to_string(h.ord) + "\n";
    emit(out, cfg.format, hfk_json(k, h), text);
    return 0;
}

int cmd_report(const TorusKnot& k, const RunConfig& cfg, std::ostream& out) {
    const UnknottingCertificate cert = band_unknotting_number(k);
    const PinchSequence seq = pinch_sequence(k);
    const HFKPrime h = hfk_prime(k);

    ordered_json j;
    j["knot"] = knot_json(k);
    j["pinch_number"] = cert.pinch_number;
    auto steps = ordered_json::array();
    for (const PinchStep& st : seq.steps) steps.push_back(step_json(st));
    j["sequence"] = std::move(steps);
    if (k.is_unknot()) {
        j["dataset"] = nullptr;
        j["cf"] = cf_json(cert.cf, std::nullopt);
    } else {
        j["dataset"] = dataset_json(extract_dataset(k), seq);
        j["cf"] = cf_json(cert.cf, eval_cf(cert.cf));
    }
    j["hfk"] = hfk_json(k, h);
    j["ord"] = cert.ord;
    j["band_unknotting_number"] = cert.band_unknotting_number;

    std::string text = "knot: " + k.to_string() + "\n";
    text += "sequence: " + sequence_arrow_text(k, seq) + "\n";
    text += "pinch number: " + std::to_string(cert.pinch_number) + "\n";
    if (!k.is_unknot()) {
        const PinchDataSet ds = extract_dataset(k);
        text += "dataset: n=" + std::to_string(ds.n) + " q0=" + std::to_string(ds.q0) +
                " p1=" + std::to_string(ds.p1) + " eps=" + sign_list_text(ds.eps) +
                " m=" + int_list_text(ds.m) + "\n";
        text += "continued fraction: " + to_nested_string(cert.cf) + "\n";
        text += "cf terms: " + cf_terms_text(cert.cf) + "\n";
        text += "value: " + eval_cf(cert.cf).to_string() + "\n";
    }
    text += "hfk': free rank " + std::to_string(h.free_rank) + ", torsion exponents " +
            int_list_text(h.torsion_exponents) + "\n";
    text += "torsion order: " + std::to_string(cert.ord) + "\n";
    text += "band unknotting number: " + std::to_string(cert.band_unknotting_number) + "\n";
    emit(out, cfg.format, j, text);
    return 0;
}

struct SweepOutcome {
    std::vector<SweepRow> rows;
    std::vector<std::string> failures;  // disagreements and drop-check breaches
};

SweepOutcome run_sweep(const RunConfig& cfg) {
    std::vector<std::pair<Int, Int>> pairs;  // sorted by (q,p)
    for (Int q = 3; q <= cfg.max_q; ++q)
        for (Int p = 2; p < q; ++p)
            if (std::gcd(p, q) == 1) pairs.emplace_back(p, q);

    SweepOutcome outcome;
    outcome.rows.resize(pairs.size());
    std::vector<std::uint8_t> drop_ok(pairs.size(), 1);

    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= pairs.size()) return;
            try {
                const auto t0 = std::chrono::steady_clock::now();
                const TorusKnot k = TorusKnot::normalize(pairs[i].first, pairs[i].second);
                SweepRow row;
                row.p = pairs[i].first;
                row.q = pairs[i].second;
                row.pinch_number = pinch_number(k);
                row.cf_terms = static_cast<Int>(cf_of_knot(k).terms.size());
                row.ord = torsion_order(k);
                row.agree = row.pinch_number == row.cf_terms && row.cf_terms == row.ord;
                drop_ok[i] = pinch_drop_check(k) ? 1 : 0;
                const auto t1 = std::chrono::steady_clock::now();
                row.elapsed_ms =
                    std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
                outcome.rows[i] = row;
            } catch (...) {
                const std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };

    const std::size_t nthreads =
        std::min<std::size_t>(static_cast<std::size_t>(cfg.jobs), std::max<std::size_t>(pairs.size(), 1));
    std::vector<std::thread> threads;
    for (std::size_t i = 0; i < nthreads; ++i) threads.emplace_back(worker);
    for (std::thread& th : threads) th.join();
    if (first_error) std::rethrow_exception(first_error);

    for (std::size_t i = 0; i < outcome.rows.size(); ++i) {
        const SweepRow& row = outcome.rows[i];
        if (!row.agree)
            outcome.failures.push_back("counterexample: T(" + std::to_string(row.p) + "," +
                                       std::to_string(row.q) + ") pinch=" +
                                       std::to_string(row.pinch_number) + " cf=" +
                                       std::to_string(row.cf_terms) + " ord=" +
                                       std::to_string(row.ord));
        if (!drop_ok[i])
            outcome.failures.push_back("drop-by-one failed for T(" + std::to_string(row.p) + "," +
                                       std::to_string(row.q) + ")");
    }
    return outcome;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const SweepOutcome outcome = run_sweep(cfg);

    switch (cfg.format) {
        case Format::csv: {
            out << "p,q,pinch_number,cf_terms,ord,agree,elapsed_ms\n";
            for (const SweepRow& r : outcome.rows)
                out << r.p << "," << r.q << "," << r.pinch_number << "," << r.cf_terms << ","
                    << r.ord << "," << (r.agree ? "true" : "false") << "," << r.elapsed_ms << "\n";
            break;
        }
        case Format::json: {
            ordered_json j;
            j["max_q"] = cfg.max_q;
            auto rows = ordered_json::array();
            for (const SweepRow& r : outcome.rows) {
                ordered_json rj;
                rj["p"] = r.p;
                rj["q"] = r.q;
                rj["pinch_number"] = r.pinch_number;
                rj["cf_terms"] = r.cf_terms;
                rj["ord"] = r.ord;
                rj["agree"] = r.agree;
                rj["elapsed_ms"] = r.elapsed_ms;
                rows.push_back(std::move(rj));
            }
            j["rows"] = std::move(rows);
            j["knots"] = outcome.rows.size();
            j["all_agree"] = outcome.failures.empty();
            out << j.dump() << "\n";
            break;
        }
        case Format::text: {
            out << "   p    q  pinch  cf  ord  agree    ms\n";
            for (const SweepRow& r : outcome.rows) {
                char buf[96];
                std::snprintf(buf, sizeof(buf), "%4lld %4lld %6lld %3lld %4lld  %5s %5lld\n",
                              static_cast<long long>(r.p), static_cast<long long>(r.q),
                              static_cast<long long>(r.pinch_number),
                              static_cast<long long>(r.cf_terms), static_cast<long long>(r.ord),
                              r.agree ? "true" : "false", static_cast<long long>(r.elapsed_ms));
                out << buf;
            }
            out << "verified " << outcome.rows.size()
                << (outcome.rows.size() == 1 ? " torus knot" : " torus knots")
                << " with 2 <= p < q <= " << cfg.max_q << ": "
                << (outcome.failures.empty() ? "all agree" : "DISAGREEMENT FOUND") << "\n";
            break;
        }
    }

    if (!outcome.failures.empty()) {
        for (const std::string& f : outcome.failures) err << f << "\n";
        return 3;
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact pinch-move, continued-fraction and unoriented knot Floer calculator "
                 "for torus knots"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string format_str = "text";
    app.add_option("--format,-f", format_str, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->envname("TORUSBAND_FORMAT");
    app.add_option("--jobs,-j", cfg.jobs, "worker threads for sweeps")
        ->check(CLI::PositiveNumber)
        ->envname("TORUSBAND_JOBS");
    app.add_option("--seed", cfg.seed, "seed for randomized subcommands")
        ->envname("TORUSBAND_SEED");

    Int p = 0, q = 0;
    const std::vector<std::pair<std::string, std::string>> knot_cmds = {
        {"pinch", "apply one pinch move to T(p,q)"},
        {"sequence", "pinch T(p,q) down to the unknot"},
        {"cf", "constrained continued fraction expansion of q/p"},
        {"dataset", "pinch data set {n, q0, p1, eps, m} of T(p,q)"},
        {"alexander", "Alexander polynomial of T(p,q)"},
        {"staircase", "staircase steps of T(p,q)"},
        {"hfk", "unoriented knot Floer homology of T(p,q)"},
        {"report", "full certificate for T(p,q)"},
    };
    for (const auto& [name, desc] : knot_cmds) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->add_option("p", p, "first parameter")->required()->check(CLI::PositiveNumber);
        sub->add_option("q", q, "second parameter")->required()->check(CLI::PositiveNumber);
        sub->fallthrough();
    }
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "sweep all coprime pairs 2 <= p < q <= max-q and check "
                                     "that Ord', the pinch number and the expansion length agree");
    verify_cmd->add_option("--max-q", cfg.max_q, "largest q in the sweep")
        ->required()
        ->check(CLI::Range(static_cast<Int>(3), std::numeric_limits<Int>::max()))
        ->envname("TORUSBAND_MAX_Q");
    verify_cmd->fallthrough();

    try {
        std::vector<const char*> argv;
        argv.push_back("torusband");
        for (const std::string& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 1;
    }

    if (format_str == "json") cfg.format = Format::json;
    if (format_str == "csv") cfg.format = Format::csv;

    const bool is_verify = app.got_subcommand("verify");
    if (cfg.format == Format::csv && !is_verify) {
        err << "csv format is only available for the verify subcommand\n";
        return 1;
    }

    try {
        if (is_verify) return cmd_verify(cfg, out, err);
        const TorusKnot k = TorusKnot::normalize(p, q);
        if (app.got_subcommand("pinch")) return cmd_pinch(k, cfg, out);
        if (app.got_subcommand("sequence")) return cmd_sequence(k, cfg, out);
        if (app.got_subcommand("cf")) return cmd_cf(k, cfg, out);
        if (app.got_subcommand("dataset")) return cmd_dataset(k, cfg, out);
        if (app.got_subcommand("alexander")) return cmd_alexander(k, cfg, out);
        if (app.got_subcommand("staircase")) return cmd_staircase(k, cfg, out);
        if (app.got_subcommand("hfk")) return cmd_hfk(k, cfg, out);
        if (app.got_subcommand("report")) return cmd_report(k, cfg, out);
        err << "unknown subcommand\n";
        return 1;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace torusband::cli
