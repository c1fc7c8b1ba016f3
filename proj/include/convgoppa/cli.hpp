/*
   Copyright 2026 The convgoppa Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CONVGOPPA_CLI_HPP
#define CONVGOPPA_CLI_HPP

#include <algorithm>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "convgoppa/cgc.hpp"
#include "convgoppa/code.hpp"
#include "convgoppa/distance.hpp"
#include "convgoppa/expr.hpp"
#include "convgoppa/extend.hpp"
#include "convgoppa/io.hpp"
#include "convgoppa/scan.hpp"

namespace convgoppa::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kInputError = 2, kResourceCap = 3 };

inline int exit_code_for(ErrorKind k) noexcept {
    switch (k) {
        case ErrorKind::EnumerationCap:
        case ErrorKind::TooLarge: return kResourceCap;
        case ErrorKind::HypothesisFailed:
        case ErrorKind::BaseNotMds: return kMismatch;
        default: return kInputError;
    }
}

struct RunConfig {
    std::uint64_t cap = kDefaultCap;
    bool porcelain = false;
    unsigned workers = 1;
};

/// Ordered key: value lines. Notes only appear in text mode.
class Report {
  public:
    void add(std::string key, std::string value) { kv_.emplace_back(std::move(key), std::move(value)); }
    void add(std::string key, std::size_t value) { add(std::move(key), std::to_string(value)); }
    void add(std::string key, bool value) { add(std::move(key), std::string(value ? "true" : "false")); }
    void add(std::string key, const char* value) { add(std::move(key), std::string(value)); }
    void note(std::string text) { notes_.push_back(std::move(text)); }

    void print(std::ostream& out, bool porcelain) const {
        std::size_t width = 0;
        for (const auto& [k, v] : kv_) width = std::max(width, k.size());
        for (const auto& [k, v] : kv_) {
            if (porcelain) out << k << ": " << v << '\n';
            else out << k << ':' << std::string(width - k.size() + 1, ' ') << v << '\n';
        }
        if (!porcelain)
            for (const auto& n : notes_) out << "note: " << n << '\n';
    }

  private:
    std::vector<std::pair<std::string, std::string>> kv_;
    std::vector<std::string> notes_;
};

inline std::string join(const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

inline std::string join_tuples(const FiniteField& f, const std::vector<Tuple>& ts) {
    std::string s;
    for (std::size_t i = 0; i < ts.size(); ++i) s += (i ? " " : "") + format_tuple(f, ts[i]);
    return s.empty() ? "-" : s;
}

inline std::string join_points(const FiniteField& f, const std::vector<Point>& ps) {
    std::string s;
    for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? " " : "") + format_point(f, ps[i]);
    return s.empty() ? "-" : s;
}

inline ConvCode load_code(const std::string& path) { return new_code(parse_code_file(read_file(path))); }

inline void add_profile(Report& r, const DistanceProfile& p) {
    r.add("nu", p.nu);
    r.add("mu", p.mu);
    r.add("hypothesis", p.hypothesis_ok);
    r.add("l_of_c", p.l_of_c);
    r.add("row_distances", join(p.row_distances));
    r.add("dfree", p.dfree);
    r.add("singleton", p.singleton);
    r.add("mds", p.is_mds);
    r.add("method", to_string(p.method));
    r.add("max_stage", p.max_stage);
    if (p.method == DistanceMethod::Oracle) {
        r.add("stabilized", p.stabilized);
        if (!p.hypothesis_ok)
            r.note("nu < k(delta+1): dfree is the least row distance up to stage " + std::to_string(p.max_stage) +
                   "; it is an upper bound and equals the free distance when the last delta+1 row distances agree");
    }
}

inline int cmd_invariants(const std::string& path, const RunConfig& cfg, std::ostream& out) {
    const auto c = load_code(path);
    const auto cp = c.classification_params();
    Report r;
    r.add("field", c.field()->spec());
    r.add("n", c.length());
    r.add("k", c.dimension());
    r.add("delta", c.degree());
    r.add("memory", c.memory());
    r.add("forney", join(c.forney_indices()));
    r.add("column_degrees", join(c.column_degrees()));
    r.add("kappa", cp.kappa);
    r.add("mu_g", cp.mu_g);
    r.add("singleton", c.singleton_bound());
    r.note("column degrees are those of the stored canonical matrix");
    r.print(out, cfg.porcelain);
    return kOk;
}

inline int cmd_freedist(const std::string& path, const DistanceOptions& dopt, const RunConfig& cfg, std::ostream& out) {
    const auto c = load_code(path);
    Report r;
    add_profile(r, free_distance(c, dopt));
    r.print(out, cfg.porcelain);
    return kOk;
}

inline int cmd_mds(const std::string& path, const DistanceOptions& dopt, const RunConfig& cfg, std::ostream& out) {
    const auto p = free_distance(load_code(path), dopt);
    Report r;
    r.add("dfree", p.dfree);
    r.add("singleton", p.singleton);
    r.add("mds", p.is_mds);
    r.add("method", to_string(p.method));
    r.print(out, cfg.porcelain);
    return kOk;
}

inline int cmd_lift(const std::string& path, unsigned s, const DistanceOptions& dopt, const RunConfig& cfg,
                    std::ostream& out) {
    if (s < 2) throw Error(ErrorKind::InvalidArgument, "--ext-degree must be at least 2");
    const auto c = load_code(path);
    const auto& src = c.field();
    const auto target = FiniteField::standard(src->characteristic(), src->degree() * s);
    const auto e = FieldEmbedding::create(src, target);
    const auto lifted = lift_code(c, e);
    const auto before = free_distance(c, dopt);
    const auto after = free_distance(lifted, dopt);
    Report r;
    r.add("source", src->spec());
    r.add("target", target->spec());
    r.add("image_of_generator", target->format(e.image_of_generator().value()));
    r.add("dfree_before", before.dfree);
    r.add("dfree_after", after.dfree);
    r.add("method_before", to_string(before.method));
    r.add("method_after", to_string(after.method));
    r.add("equal", before.dfree == after.dfree);
    r.print(out, cfg.porcelain);
    return before.dfree == after.dfree ? kOk : kMismatch;
}

inline int cmd_cgc_build(const std::string& path, const std::string& output, const RunConfig& cfg, std::ostream& out) {
    const auto file = parse_cgc_file(read_file(path));
    const auto code = build(file.spec());
    const auto text = format_code_file(code.generator());
    if (output.empty()) {
        out << text;
    } else {
        write_file(output, text);
        Report r;
        r.add("wrote", output);
        r.print(out, cfg.porcelain);
    }
    return kOk;
}

inline int cmd_cgc_scan(const std::string& path, const std::string& predict, const DistanceOptions& dopt,
                        const RunConfig& cfg, std::ostream& out) {
    const auto file = parse_cgc_file(read_file(path));
    const FiniteField& f = *file.field;
    auto fam = cgc_family(file.field, file.points, file.delta, file.scan_domain());
    std::vector<Condition> conds;
    if (!predict.empty()) {
        conds = parse_conditions(file.field, predict);
        for (const auto& c : conds)
            if (c.arity() > file.delta + 1)
                throw Error(ErrorKind::InvalidArgument, "condition '" + c.text() + "' uses more than delta+1 parameters");
    }
    ScanOptions sopt;
    sopt.distance = dopt;
    sopt.workers = cfg.workers;
    const auto rep = scan_family(fam, conds, sopt);
    Report r;
    r.add("family", rep.description);
    r.add("total", rep.total);
    r.add("mds", rep.mds_set.size());
    r.add("non_mds", rep.non_mds_set.size());
    r.add("excluded", rep.excluded.size());
    r.add("failed", rep.failed.size());
    r.add("non_mds_set", join_tuples(f, rep.non_mds_set));
    std::vector<Tuple> ex;
    for (const auto& o : rep.excluded) ex.push_back(o.params);
    r.add("excluded_set", join_tuples(f, ex));
    if (rep.matched_equations) {
        std::string per;
        for (std::size_t i = 0; i < conds.size(); ++i)
            per += (i ? " " : "") + std::string(rep.condition_matched[i] ? "true" : "false");
        r.add("conditions", per);
        r.add("mismatches", join_tuples(f, rep.mismatches));
        r.add("matched_equations", *rep.matched_equations);
    }
    for (const auto& o : rep.failed) r.note("failed " + format_tuple(f, o.params) + ": " + o.reason);
    if (!rep.excluded.empty()) r.note("excluded tuples are counted as non-MDS when matching predictions");
    r.print(out, cfg.porcelain);
    if (rep.matched_equations && !*rep.matched_equations) return rep.failed.empty() ? kMismatch : kResourceCap;
    return rep.failed.empty() ? kOk : kResourceCap;
}

inline Point parse_point_arg(const FiniteField& f, const std::string& text) {
    const auto parts = detail::split(text, ',');
    if (parts.size() != 2) throw Error(ErrorKind::Parse, "--point expects 'a,b'");
    return {f.parse(parts[0]), f.parse(parts[1])};
}

inline int cmd_cgc_extend(const std::string& path, const std::string& point, const std::string& output,
                          const DistanceOptions& dopt, const RunConfig& cfg, std::ostream& out) {
    const auto file = parse_cgc_file(read_file(path));
    const FiniteField& f = *file.field;
    const auto p = parse_point_arg(f, point);
    const auto rep = check_extension(file.spec(), p, dopt.cap);
    Report r;
    r.add("point", format_point(f, p));
    r.add("F", f.format(rep.F[0]) + " " + f.format(rep.F[1]) + " " + f.format(rep.F[2]));
    std::string hs;
    for (std::size_t i = 0; i < rep.h.size(); ++i) hs += (i ? " " : "") + f.format(rep.h[i]);
    r.add("h", hs);
    r.add("h_checked_upto", rep.h_checked_upto);
    r.add("stacked_distance_ge_3", rep.conditions.stacked_distance_ge_3);
    r.add("a_nonzero", rep.conditions.a_nonzero);
    r.add("s0_at_b_nonzero", rep.conditions.s0_at_b_nonzero);
    r.add("lambda2_nonzero", rep.conditions.lambda2_nonzero);
    r.add("all_h_nonzero", rep.conditions.all_h_nonzero);
    r.add("base_dfree", rep.base_dfree);
    r.add("base_mu", rep.base_mu);
    r.add("base_l", rep.base_l);
    r.add("extended_mu", rep.extended_mu);
    r.add("extended_l", rep.extended_l);
    r.add("k0", rep.k0);
    r.add("f_k0_full_rank", rep.f_k0_full_rank);
    r.add("f_k0_distance", rep.f_k0_distance);
    r.add("dfree_lower_bound", rep.dfree_lower_bound);
    r.add("extended_singleton", rep.extended_singleton);
    r.add("stacked_extended_ge_3", rep.stacked_extended_ge_3);
    r.add("l_growth_ok", rep.l_growth_ok);
    r.add("theorem_certified", rep.theorem_certified);
    r.add("lemma_certified", rep.lemma_certified);
    r.add("certified_mds", rep.certified_mds);
    const auto ext = free_distance(*rep.extended, dopt);
    r.add("extended_dfree", ext.dfree);
    r.add("extended_mds", ext.is_mds);
    if (!output.empty()) {
        write_file(output, format_code_file(rep.extended->generator()));
        r.add("wrote", output);
    }
    r.print(out, cfg.porcelain);
    return rep.certified_mds ? kOk : kMismatch;
}

inline int cmd_cgc_eligible(const std::string& path, const DistanceOptions& dopt, const RunConfig& cfg,
                            std::ostream& out) {
    const auto file = parse_cgc_file(read_file(path));
    const auto res = eligible_points(file.spec(), cfg.workers, dopt.cap);
    Report r;
    r.add("count", res.points.size());
    r.add("points", join_points(*file.field, res.points));
    if (!res.diagnostic.empty()) r.add("diagnostic", res.diagnostic);
    r.print(out, cfg.porcelain);
    return kOk;
}

/// Parses arguments and runs one command; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Invariants, free distances and Goppa constructions for convolutional codes"};
    app.require_subcommand(1);
    RunConfig cfg;
    DistanceOptions dopt;
    std::size_t max_stage = 0;
    app.add_option("--cap", cfg.cap, "search node cap")->check(CLI::Range(std::uint64_t{1000}, std::uint64_t{1} << 62));
    app.add_flag("--porcelain", cfg.porcelain, "stable key: value output");
    app.add_option("--workers", cfg.workers, "worker threads for scans")->check(CLI::Range(1u, 1024u));

    std::string file, output, point, predict;
    unsigned ext_degree = 0;
    auto* inv = app.add_subcommand("invariants", "structural invariants of a code file");
    inv->add_option("file", file, "code file")->required();
    auto* fd = app.add_subcommand("freedist", "free distance and row distances");
    fd->add_option("file", file, "code file")->required();
    fd->add_flag("--oracle", dopt.force_oracle, "use the stage-by-stage oracle");
    auto* ms_opt = fd->add_option("--max-stage", max_stage, "last oracle stage");
    auto* mds = app.add_subcommand("mds", "MDS test against the generalized Singleton bound");
    mds->add_option("file", file, "code file")->required();
    mds->add_flag("--oracle", dopt.force_oracle, "use the stage-by-stage oracle");
    auto* lift = app.add_subcommand("lift", "compare free distances over an extension field");
    lift->add_option("file", file, "code file")->required();
    lift->add_option("--ext-degree", ext_degree, "extension degree s")->required();

    auto* cgc = app.add_subcommand("cgc", "convolutional Goppa codes");
    cgc->require_subcommand(1);
    auto* build_cmd = cgc->add_subcommand("build", "write the generator matrix of a CGC spec");
    build_cmd->add_option("file", file, "CGC file")->required();
    build_cmd->add_option("-o,--output", output, "output code file");
    auto* scan_cmd = cgc->add_subcommand("scan", "scan lambda over the file's domain");
    scan_cmd->add_option("file", file, "CGC file")->required();
    scan_cmd->add_option("--predict", predict, "predicted non-MDS conditions separated by ';'");
    auto* ext_cmd = cgc->add_subcommand("extend", "certify appending one point");
    ext_cmd->add_option("file", file, "CGC file")->required();
    ext_cmd->add_option("--point", point, "new point as a,b")->required();
    ext_cmd->add_option("-o,--output", output, "write the extended code file");
    auto* elig_cmd = cgc->add_subcommand("eligible", "all certified extension points");
    elig_cmd->add_option("file", file, "CGC file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? kOk : kInputError;
    }
    dopt.cap = cfg.cap;
    if (ms_opt->count() > 0) dopt.max_stage = max_stage;

    try {
        if (*inv) return cmd_invariants(file, cfg, out);
        if (*fd) return cmd_freedist(file, dopt, cfg, out);
        if (*mds) return cmd_mds(file, dopt, cfg, out);
        if (*lift) return cmd_lift(file, ext_degree, dopt, cfg, out);
        if (*build_cmd) return cmd_cgc_build(file, output, cfg, out);
        if (*scan_cmd) return cmd_cgc_scan(file, predict, dopt, cfg, out);
        if (*ext_cmd) return cmd_cgc_extend(file, point, output, dopt, cfg, out);
        if (*elig_cmd) return cmd_cgc_eligible(file, dopt, cfg, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}

}  // namespace convgoppa::cli

#endif
