#include "finsler/commands.hpp"

#include "finsler/algebra_io.hpp"
#include "finsler/errors.hpp"
#include "finsler/report.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

namespace finsler {

using nlohmann::ordered_json;

EmitFormat emit_from_string(const std::string& s) {
    if (s == "object") return EmitFormat::Object;
    if (s == "table") return EmitFormat::Table;
    throw ValidationError("--emit must be object or table");
}

ZetaSource zeta_source_from_string(const std::string& s) {
    if (s == "generic") return ZetaSource::Generic;
    if (s == "paper-table") return ZetaSource::PaperTable;
    throw ValidationError("--zeta-source must be generic or paper-table");
}

std::vector<double> parse_direction(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            double v = std::stod(item, &pos);
            if (pos != item.size()) throw ValidationError("bad direction component: " + item);
            out.push_back(v);
        } catch (const ValidationError&) {
            throw;
        } catch (...) {
            throw ValidationError("bad direction component: " + item);
        }
    }
    if (out.empty()) throw ValidationError("--direction must be a comma-separated vector");
    return out;
}

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw ValidationError("cannot open input file " + p.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int emit_error(std::ostream& out, const std::string& command, const std::string& message, int code) {
    ReportEnvelope env;
    env.command = command;
    env.input_digest = "";
    env.timestamp = utc_timestamp();
    env.results = ordered_json{{"error", message}, {"exit_code", code}};
    out << env.to_object_text();
    return code;
}

const char* source_name(ZetaSource s) {
    return s == ZetaSource::Generic ? "generic" : "paper-table";
}

ordered_json ricci_report_json(const RicciReport& rep) {
    ordered_json r;
    r["metric"] = rep.metric_name;
    r["zeta_source"] = source_name(rep.zeta_source);
    r["alpha_ric"] = rep.alpha_ric;
    r["rt_term"] = rep.rt_term;
    r["total"] = rep.total;
    r["s_curvature_vanishes"] = rep.s_vanishes;
    r["s_ratio"] = rep.s_ratio;
    r["B"] = rep.B_value;
    r["validity"] = rep.valid ? "valid" : "invalid";
    return r;
}

void emit_ricci_table(std::ostream& out, const RicciReport& rep) {
    out << "metric\t" << rep.metric_name << "\n"
        << "zeta_source\t" << source_name(rep.zeta_source) << "\n"
        << "alpha_ric\t" << rep.alpha_ric << "\n"
        << "rt_term\t" << rep.rt_term << "\n"
        << "total\t" << rep.total << "\n"
        << "s_curvature_vanishes\t" << (rep.s_vanishes ? "true" : "false") << "\n"
        << "s_ratio\t" << rep.s_ratio << "\n"
        << "B\t" << rep.B_value << "\n";
}

} // namespace

int run_verify_zeta(const VerifyZetaOptions& opts, std::ostream& out) {
    const std::string command = "verify-zeta --metric " + opts.metric;
    TableKind kind;
    PhiFamily phi;
    try {
        if (opts.metric == "square") {
            kind = TableKind::Square;
            phi = make_phi(PhiKind::Square);
        } else if (opts.metric == "randers-square") {
            kind = TableKind::RandersSquare;
            phi = make_phi(PhiKind::RandersSquare);
        } else {
            throw ValidationError("--metric must be square or randers-square");
        }
    } catch (const ValidationError& e) {
        return emit_error(out, command, e.what(), kExitValidation);
    }

    ZetaSet gen = generic_zeta(qtp(phi), phi.name());
    ZetaSet tab = table_zeta(kind);
    ZetaComparison cmp = compare_zeta(gen, tab);

    if (opts.emit == EmitFormat::Table) {
        for (const auto& v : cmp.verdicts) {
            out << v.index << "\t" << (v.exact_match ? "exact_match" : "mismatch");
            if (v.witness)
                out << "\ts=" << v.witness->s << "\tB=" << v.witness->B << "\tgeneric="
                    << v.witness->lhs_value << "\ttable=" << v.witness->rhs_value;
            out << "\n";
        }
        out << "# " << (cmp.all_match() ? "all 26 entries match" : "mismatches present") << "\n";
        return cmp.all_match() ? kExitOk : kExitZetaMismatch;
    }

    ReportEnvelope env;
    env.command = command;
    env.input_digest = fnv1a_hex(opts.metric);
    env.timestamp = utc_timestamp();
    ordered_json verdicts = ordered_json::array();
    for (const auto& v : cmp.verdicts) {
        ordered_json jv;
        jv["index"] = v.index;
        jv["verdict"] = v.exact_match ? "exact_match" : "mismatch";
        if (v.witness) {
            jv["witness"] = ordered_json{{"s", v.witness->s},
                                         {"B", v.witness->B},
                                         {"generic_value", v.witness->lhs_value},
                                         {"table_value", v.witness->rhs_value}};
        }
        verdicts.push_back(jv);
    }
    env.results["metric"] = opts.metric;
    env.results["verdicts"] = verdicts;
    env.results["all_match"] = cmp.all_match();
    env.results["mismatched_indices"] = cmp.mismatched_indices();
    if (!cmp.all_match())
        env.warnings.push_back("table mismatches found at indices listed in results.mismatched_indices");
    out << env.to_object_text();
    return cmp.all_match() ? kExitOk : kExitZetaMismatch;
}

int run_ricci(const RicciOptions& opts, std::ostream& out) {
    const std::string command = "ricci --input " + opts.input.filename().string();
    std::string bytes;
    ProblemSpec spec;
    try {
        bytes = slurp(opts.input);
        spec = parse_algebra(opts.input);
        if (static_cast<int>(opts.direction.size()) != spec.algebra.n)
            throw ValidationError("--direction must have " + std::to_string(spec.algebra.n) +
                                  " components");
        double n2 = 0;
        for (double v : opts.direction) n2 += v * v;
        if (n2 == 0) throw ValidationError("--direction must be nonzero");
        const bool named = spec.phi.kind == PhiKind::Square || spec.phi.kind == PhiKind::RandersSquare;
        if (!named && opts.zeta_source == ZetaSource::PaperTable)
            throw ValidationError("paper-table zetas exist only for square and randers-square");
        if (!named && opts.vanishing_s)
            throw ValidationError("--vanishing-s applies to the square and randers-square metrics");
    } catch (const ValidationError& e) {
        return emit_error(out, command, e.what(), kExitValidation);
    }

    RicciReport rep;
    try {
        const bool named = spec.phi.kind == PhiKind::Square || spec.phi.kind == PhiKind::RandersSquare;
        if (named) {
            TableKind kind =
                spec.phi.kind == PhiKind::Square ? TableKind::Square : TableKind::RandersSquare;
            rep = opts.vanishing_s
                      ? ricci_vanishing_s(spec.algebra, kind, opts.direction, spec.alpha_mode,
                                          opts.zeta_source, opts.tol)
                      : ricci_homogeneous(spec.algebra, kind, opts.direction, spec.alpha_mode,
                                          opts.zeta_source, opts.tol);
        } else {
            rep = ricci_general(spec.algebra, spec.phi, opts.direction, spec.alpha_mode, opts.tol);
        }
    } catch (const MathDomainError& e) {
        return emit_error(out, command, e.what(), kExitMathDomain);
    } catch (const ValidationError& e) {
        return emit_error(out, command, e.what(), kExitValidation);
    }

    if (opts.emit == EmitFormat::Table) {
        emit_ricci_table(out, rep);
        return kExitOk;
    }
    ReportEnvelope env;
    env.command = command;
    env.input_digest = fnv1a_hex(bytes);
    env.timestamp = utc_timestamp();
    env.results = ricci_report_json(rep);
    ordered_json dir = ordered_json::array();
    for (double v : opts.direction) dir.push_back(v);
    env.results["direction"] = dir;
    env.results["formula"] = opts.vanishing_s ? "vanishing-s-reduced" : "homogeneous";
    out << env.to_object_text();
    return kExitOk;
}

int run_scan(const ScanOptions& opts, std::ostream& out) {
    const std::string command = "scan --input " + opts.input.filename().string();
    std::string bytes;
    ProblemSpec spec;
    try {
        if (opts.grid < 1) throw ValidationError("--grid must be >= 1");
        bytes = slurp(opts.input);
        spec = parse_algebra(opts.input);
        if (spec.phi.kind != PhiKind::Square && spec.phi.kind != PhiKind::RandersSquare &&
            opts.zeta_source == ZetaSource::PaperTable)
            throw ValidationError("paper-table zetas exist only for square and randers-square");
    } catch (const ValidationError& e) {
        return emit_error(out, command, e.what(), kExitValidation);
    }

    ScanReport rep;
    try {
        rep = riemannian_implication(spec.algebra, spec.phi, opts.grid, opts.zeta_source,
                                     spec.alpha_mode, opts.tol);
    } catch (const MathDomainError& e) {
        return emit_error(out, command, e.what(), kExitMathDomain);
    } catch (const ValidationError& e) {
        return emit_error(out, command, e.what(), kExitValidation);
    }

    if (opts.emit == EmitFormat::Table) {
        for (std::size_t i = 0; i < rep.values.size(); ++i) {
            out << i;
            for (double v : rep.directions[i]) out << "\t" << v;
            out << "\t" << rep.values[i] << "\n";
        }
        out << "# min=" << rep.min_ric << " max=" << rep.max_ric << " neg=" << rep.negative
            << " zero=" << rep.zero << " pos=" << rep.positive << "\n";
        out << "# s_curvature_vanishes=" << (rep.s_vanishes ? "true" : "false") << "\n";
        out << "# " << rep.message << "\n";
        return kExitOk;
    }

    ReportEnvelope env;
    env.command = command;
    env.input_digest = fnv1a_hex(bytes);
    env.timestamp = utc_timestamp();
    env.results["metric"] = spec.phi.name();
    env.results["zeta_source"] = source_name(opts.zeta_source);
    env.results["grid"] = opts.grid;
    env.results["s_curvature_vanishes"] = rep.s_vanishes;
    env.results["min"] = rep.min_ric;
    env.results["max"] = rep.max_ric;
    env.results["sign_pattern"] =
        ordered_json{{"negative", rep.negative}, {"zero", rep.zero}, {"positive", rep.positive}};
    env.results["riemannian_implication"] = rep.riemannian_flag;
    env.results["message"] = rep.message;
    ordered_json values = ordered_json::array();
    for (std::size_t i = 0; i < rep.values.size(); ++i) {
        ordered_json dir = ordered_json::array();
        for (double v : rep.directions[i]) dir.push_back(v);
        values.push_back(ordered_json{{"direction", dir}, {"ric", rep.values[i]}});
    }
    env.results["values"] = values;
    out << env.to_object_text();
    return kExitOk;
}

} // namespace finsler
