#include "degseq/report.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>

#include "degseq/parallel.hpp"

namespace degseq {

std::pair<long, long> parse_range(const std::string& text) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            long v = std::stol(text);
            return {v, v};
        }
        long lo = std::stol(text.substr(0, dots));
        long hi = std::stol(text.substr(dots + 2));
        if (lo > hi) throw std::domain_error("empty range");
        return {lo, hi};
    } catch (const std::domain_error&) {
        throw;
    } catch (const std::exception&) {
        throw std::domain_error("range must look like '4..9' or '7': " + text);
    }
}

std::string csv_number(long double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17Lg", v);
    return buf;
}

nlohmann::json to_json(const Scalar& s) {
    nlohmann::json j;
    j["value"] = static_cast<double>(s.value());
    if (s.exact()) j["exact"] = s.rat().str();
    return j;
}

nlohmann::json to_json(const DegreeSequence& d) { return nlohmann::json(d.values()); }

nlohmann::json to_json(const ExtremalReport& rep) {
    nlohmann::json j;
    j["function"] = rep.objective.str();
    j["n"] = rep.n;
    j["m"] = rep.m;
    j["mode"] = to_string(rep.mode);
    j["oracle"] = to_string(rep.oracle);
    j["optimum"] = to_json(rep.optimum);
    nlohmann::json seqs = nlohmann::json::array();
    for (const auto& d : rep.optimal_sequences) seqs.push_back(to_json(d));
    j["optimal_sequences"] = seqs;
    j["unique"] = rep.unique;
    nlohmann::json ties = nlohmann::json::array();
    for (const auto& t : rep.near_ties)
        ties.push_back({{"sequence", to_json(t.sequence)}, {"gap", static_cast<double>(t.gap)}});
    j["near_ties"] = ties;
    if (!rep.note.empty()) j["note"] = rep.note;
    return j;
}

nlohmann::json to_json(const ClassReport& rep, const std::string& spec_text) {
    nlohmann::json j;
    j["function"] = spec_text;
    j["class"] = std::string(1, rep.which);
    j["member"] = rep.member();
    j["checked_up_to"] = rep.checked_up_to;
    j["centered_ok"] = rep.centered_ok;
    j["condition_1_ok"] = rep.condition_1_ok;
    if (rep.which == 'F') j["condition_2_ok"] = rep.condition_2_ok;
    if (rep.which == 'G') {
        j["condition_7_ok"] = rep.condition_7_ok;
        j["strictly_increasing_ok"] = rep.strictly_increasing_ok;
    }
    if (rep.first_failure) {
        j["first_failure"] = {{"condition", rep.first_failure->condition},
                              {"k", rep.first_failure->k},
                              {"lhs", static_cast<double>(rep.first_failure->lhs)},
                              {"rhs", static_cast<double>(rep.first_failure->rhs)}};
    }
    nlohmann::json ties = nlohmann::json::array();
    for (const auto& t : rep.ties) ties.push_back({{"condition", t.condition}, {"k", t.k}});
    j["ties"] = ties;
    if (rep.overflow_at) j["overflow_at"] = *rep.overflow_at;
    return j;
}

nlohmann::json to_json(const EpsilonWindow& win) {
    nlohmann::json j;
    j["q"] = win.q;
    j["m_q"] = win.m_q;
    j["xi"] = static_cast<double>(win.xi);
    j["xi0"] = static_cast<double>(win.xi0);
    j["xi_upper_bound"] = static_cast<double>(win.xi_upper_bound);
    j["xi_at_bound"] = win.xi_at_bound;
    nlohmann::json samples = nlohmann::json::array();
    for (const auto& s : win.samples)
        samples.push_back({{"eps", static_cast<double>(s.eps)},
                           {"quasi_star", static_cast<double>(s.quasi_star_value)},
                           {"clique", static_cast<double>(s.clique_value)}});
    j["samples"] = samples;
    return j;
}

namespace {

void validate_tau(const RunConfig& cfg) {
    if (!(cfg.tau > 0.0L)) throw std::domain_error("tau must be positive");
}

std::string one_based_edges(const Graph& g) {
    std::string out;
    for (int i = 0; i < g.vertex_count(); ++i)
        for (int j = i + 1; j < g.vertex_count(); ++j)
            if (g.adjacent(i, j)) {
                if (!out.empty()) out += ' ';
                out += "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
            }
    return out;
}

std::string join_sequences(const std::vector<DegreeSequence>& seqs) {
    std::string out;
    for (const auto& d : seqs) {
        if (!out.empty()) out += '|';
        out += d.str();
    }
    return out;
}

struct VerifyRow {
    long n = 0, m = 0;
    VerifyResult result;
};

int summary_exit(int fails, int inconclusive) {
    if (fails > 0) return kExitFail;
    if (inconclusive > 0) return kExitInconclusive;
    return kExitPass;
}

}  // namespace

int cmd_construct(const std::string& kind, int n, long m, const std::string& bits,
                  const RunConfig& cfg, std::ostream& out) {
    Graph g(1);
    if (kind == "qs")
        g = make_quasi_star(n, m);
    else if (kind == "qk")
        g = make_quasi_complete(n, m);
    else if (kind == "threshold")
        g = threshold_from_creation_sequence(bits);
    else
        throw std::domain_error("construct kind must be qs, qk or threshold");
    DegreeSequence d = degree_sequence(g);

    if (cfg.format == "json") {
        nlohmann::json j;
        j["kind"] = kind;
        j["n"] = g.vertex_count();
        j["m"] = g.edge_count();
        j["degrees"] = d.values();
        j["conjugate"] = d.conjugate();
        nlohmann::json edges = nlohmann::json::array();
        for (int i = 0; i < g.vertex_count(); ++i)
            for (int jv = i + 1; jv < g.vertex_count(); ++jv)
                if (g.adjacent(i, jv)) edges.push_back({i + 1, jv + 1});
        j["edges"] = edges;
        out << j.dump() << "\n";
    } else if (cfg.format == "csv") {
        out << "kind,n,m,degrees,conjugate\n";
        std::string conj;
        for (std::size_t i = 0; i < d.conjugate().size(); ++i) {
            if (i) conj += ' ';
            conj += std::to_string(d.conjugate()[i]);
        }
        out << kind << "," << g.vertex_count() << "," << g.edge_count() << "," << d.str() << ","
            << conj << "\n";
    } else {
        out << kind << " n=" << g.vertex_count() << " m=" << g.edge_count() << "\n";
        out << "degrees:   " << d.str() << "\n";
        std::string conj;
        for (std::size_t i = 0; i < d.conjugate().size(); ++i) {
            if (i) conj += ' ';
            conj += std::to_string(d.conjugate()[i]);
        }
        out << "conjugate: " << conj << "\n";
        out << "edges: " << one_based_edges(g) << "\n";
    }
    return kExitPass;
}

int cmd_check_class(const RunConfig& cfg, std::ostream& out) {
    validate_tau(cfg);
    FunctionSpec spec = parse_function(cfg.function_text);
    ClassReport f_rep = in_class_F(spec, cfg.K, cfg.tau);
    ClassReport g_rep = in_class_G(spec, cfg.K, cfg.tau);

    if (cfg.format == "json") {
        nlohmann::json j;
        j["command"] = "check-class";
        j["F"] = to_json(f_rep, cfg.function_text);
        j["G"] = to_json(g_rep, cfg.function_text);
        out << j.dump() << "\n";
        return kExitPass;
    }
    if (cfg.format == "csv") {
        out << "function,class,member,checked_up_to,first_failure_condition,first_failure_k\n";
        for (const ClassReport* rep : {&f_rep, &g_rep}) {
            out << cfg.function_text << "," << rep->which << "," << (rep->member() ? "yes" : "no")
                << "," << rep->checked_up_to << ","
                << (rep->first_failure ? rep->first_failure->condition : "") << ","
                << (rep->first_failure ? std::to_string(rep->first_failure->k) : "") << "\n";
        }
        return kExitPass;
    }
    out << "function: " << cfg.function_text << "\n";
    for (const ClassReport* rep : {&f_rep, &g_rep}) {
        out << rep->which << ": " << (rep->member() ? "yes" : "no") << " (verified up to "
            << rep->checked_up_to << ")";
        if (rep->first_failure)
            out << " first failure " << rep->first_failure->condition << " at k="
                << rep->first_failure->k << " lhs=" << csv_number(rep->first_failure->lhs)
                << " rhs=" << csv_number(rep->first_failure->rhs);
        if (rep->overflow_at) out << " numeric range exhausted at k=" << *rep->overflow_at;
        out << "\n";
        for (const auto& t : rep->ties)
            out << "  boundary equality " << t.condition << " at k=" << t.k << "\n";
    }
    return kExitPass;
}

namespace {

int emit_verify_rows(const std::string& theorem, const RunConfig& cfg,
                     const std::vector<VerifyRow>& rows, std::ostream& out) {
    int fails = 0, inconclusive = 0;
    for (const auto& row : rows) {
        if (row.result.verdict == Verdict::Fail) ++fails;
        if (row.result.verdict == Verdict::Inconclusive) ++inconclusive;
    }
    if (cfg.format == "json") {
        nlohmann::json j;
        j["command"] = "verify";
        j["theorem"] = theorem;
        j["function"] = cfg.function_text;
        nlohmann::json jr = nlohmann::json::array();
        for (const auto& row : rows) {
            nlohmann::json r;
            r["n"] = row.n;
            r["m"] = row.m;
            r["verdict"] = to_string(row.result.verdict);
            r["note"] = row.result.note;
            if (row.result.verdict != Verdict::Skipped) r["report"] = to_json(row.result.report);
            jr.push_back(r);
        }
        j["rows"] = jr;
        j["summary"] = {{"fail", fails},
                        {"inconclusive", inconclusive},
                        {"total", static_cast<long>(rows.size())}};
        out << j.dump() << "\n";
    } else if (cfg.format == "csv") {
        out << "theorem,function,n,m,verdict,optimum,optimal_sequences,note\n";
        for (const auto& row : rows) {
            out << theorem << "," << cfg.function_text << "," << row.n << "," << row.m << ","
                << to_string(row.result.verdict) << ","
                << csv_number(row.result.report.optimum.value()) << ","
                << join_sequences(row.result.report.optimal_sequences) << ",\"" << row.result.note
                << "\"\n";
        }
    } else {
        for (const auto& row : rows) {
            out << theorem << " n=" << row.n << " m=" << row.m << " "
                << to_string(row.result.verdict);
            if (row.result.verdict != Verdict::Skipped)
                out << " optimum=" << row.result.report.optimum.str() << " "
                    << join_sequences(row.result.report.optimal_sequences);
            if (!row.result.note.empty()) out << "  [" << row.result.note << "]";
            out << "\n";
        }
        out << "summary: " << rows.size() - fails - inconclusive << " pass, " << fails
            << " fail, " << inconclusive << " inconclusive\n";
    }
    return summary_exit(fails, inconclusive);
}

}  // namespace

int cmd_verify(const std::string& theorem, const RunConfig& cfg, std::ostream& out) {
    validate_tau(cfg);
    EvalOptions opts{cfg.tau, 1};
    unsigned threads = resolve_threads(cfg.threads);

    if (theorem == "t8") {
        int fails = 0;
        nlohmann::json jrows = nlohmann::json::array();
        std::ostringstream text;
        for (long q = cfg.q_lo; q <= cfg.q_hi; ++q) {
            try {
                EpsilonWindow win = find_epsilon_window(q);
                CounterexampleRecord rec = verify_counterexample(q, win.xi0 / 2.0L);
                bool ok = rec.clique_wins && rec.sign_consistent;
                if (!ok) ++fails;
                if (cfg.format == "json") {
                    nlohmann::json r = to_json(win);
                    r["verdict"] = ok ? "PASS" : "FAIL";
                    jrows.push_back(r);
                } else {
                    text << "t8 q=" << q << " " << (ok ? "PASS" : "FAIL")
                         << " xi=" << csv_number(win.xi) << " xi0=" << csv_number(win.xi0)
                         << " bound=" << csv_number(win.xi_upper_bound)
                         << (win.xi_at_bound ? " [xi at its analytic upper bound]" : "")
                         << (win.xi0 > 0.5L ? " [window reaches eps=0.5]" : "") << "\n";
                }
            } catch (const std::runtime_error& e) {
                ++fails;
                if (cfg.format != "json") text << "t8 q=" << q << " FAIL " << e.what() << "\n";
            }
        }
        if (cfg.format == "json") {
            nlohmann::json j;
            j["command"] = "verify";
            j["theorem"] = "t8";
            j["rows"] = jrows;
            j["summary"] = {{"fail", fails}};
            out << j.dump() << "\n";
        } else {
            out << text.str();
        }
        return fails > 0 ? kExitFail : kExitPass;
    }

    FunctionSpec spec = parse_function(cfg.function_text);
    std::vector<VerifyRow> rows;
    for (long n = cfg.n_lo; n <= cfg.n_hi; ++n) {
        long default_hi;
        if (theorem == "t5")
            default_hi = n - 1;
        else if (theorem == "lemma-iso")
            default_hi = max_edges(static_cast<int>(n) - 1);
        else
            default_hi = max_edges(static_cast<int>(n));
        long m_lo = cfg.m_lo >= 0 ? cfg.m_lo : 0;
        long m_hi = cfg.m_hi >= 0 ? std::min(cfg.m_hi, default_hi) : default_hi;
        for (long m = m_lo; m <= m_hi; ++m) rows.push_back({n, m, {}});
    }
    parallel_for(rows.size(), threads, [&](std::size_t idx) {
        VerifyRow& row = rows[idx];
        const int n = static_cast<int>(row.n);
        if (theorem == "t5")
            row.result = verify_unique_quasi_star(spec, n, row.m, opts);
        else if (theorem == "t11")
            row.result = verify_unique_quasi_complete(spec, n, row.m, opts);
        else if (theorem == "lemma-iso")
            row.result = verify_isolated_vertex_lemma(spec, n, row.m, opts);
        else
            throw std::domain_error("theorem must be t5, t11, lemma-iso or t8");
    });
    return emit_verify_rows(theorem, cfg, rows, out);
}

int cmd_extremal(const std::string& mode, const RunConfig& cfg, std::ostream& out) {
    validate_tau(cfg);
    FunctionSpec spec = parse_function(cfg.function_text);
    Mode m = (mode == "max") ? Mode::Max : Mode::Min;
    if (mode != "max" && mode != "min") throw std::domain_error("mode must be max or min");
    OracleKind kind;
    if (cfg.oracle == "threshold")
        kind = OracleKind::ThresholdOnly;
    else if (cfg.oracle == "graphical")
        kind = OracleKind::AllGraphical;
    else
        throw std::domain_error("oracle must be threshold or graphical");
    EvalOptions opts{cfg.tau, resolve_threads(cfg.threads)};
    ExtremalReport rep = find_extremal(spec, static_cast<int>(cfg.n_lo), cfg.m_lo, m, kind, opts);

    if (cfg.format == "json") {
        out << to_json(rep).dump() << "\n";
    } else if (cfg.format == "csv") {
        out << "function,n,m,mode,oracle,optimum,unique,optimal_sequences,near_ties\n";
        out << rep.objective.str() << "," << rep.n << "," << rep.m << "," << to_string(rep.mode)
            << "," << to_string(rep.oracle) << "," << csv_number(rep.optimum.value()) << ","
            << (rep.unique ? "yes" : "no") << "," << join_sequences(rep.optimal_sequences) << ","
            << rep.near_ties.size() << "\n";
    } else {
        out << "extremal " << to_string(rep.mode) << " " << rep.objective.str() << " over G("
            << rep.n << "," << rep.m << ") oracle=" << to_string(rep.oracle) << "\n";
        out << "optimum: " << rep.optimum.str() << (rep.unique ? " (unique)" : "") << "\n";
        for (const auto& d : rep.optimal_sequences) out << "sequence: " << d.str() << "\n";
        for (const auto& t : rep.near_ties)
            out << "near-tie: " << t.sequence.str() << " gap=" << csv_number(t.gap) << "\n";
    }
    return rep.near_ties.empty() ? kExitPass : kExitInconclusive;
}

}  // namespace degseq
