#include "extvan/pipeline.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "extvan/ext.hpp"
#include "extvan/ext_generators.hpp"
#include "extvan/radical.hpp"
#include "extvan/vanishing.hpp"

namespace extvan {

namespace {

std::vector<std::vector<std::size_t>> builtin_cyclic(std::size_t n) {
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return t;
}

std::vector<std::vector<std::size_t>> builtin_klein() {
    std::vector<std::vector<std::size_t>> t(4, std::vector<std::size_t>(4));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) t[i][j] = i ^ j;
    return t;
}

std::vector<std::vector<std::size_t>> builtin_symmetric(std::size_t n) {
    if (n < 1 || n > 5) raise(ErrorCode::ConfigError, "symmetric preset supports n = 1..5");
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    auto index_of = [&](const std::vector<std::size_t>& q) {
        for (std::size_t i = 0; i < perms.size(); ++i)
            if (perms[i] == q) return i;
        raise_internal("permutation index lookup failed");
    };
    std::vector<std::vector<std::size_t>> t(perms.size(), std::vector<std::size_t>(perms.size()));
    for (std::size_t i = 0; i < perms.size(); ++i)
        for (std::size_t j = 0; j < perms.size(); ++j) {
            std::vector<std::size_t> comp(n);
            for (std::size_t k = 0; k < n; ++k) comp[k] = perms[i][perms[j][k]];
            t[i][j] = index_of(comp);
        }
    return t;
}

template <class F>
typename F::Elem parse_scalar(const F& field, const std::string& text) {
    return field.from_rat(Rat::from_string(text));
}

template <class F>
StructureConstantInput<F> parse_structure_file(const F& field, const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(ErrorCode::ConfigError, "cannot open structure-constant file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        raise(ErrorCode::ConfigError, std::string("structure-constant file is not JSON: ") + e.what());
    }
    StructureConstantInput<F> sc;
    sc.dim = j.at("dim").get<std::size_t>();
    sc.unit_index = j.at("unit_index").get<std::size_t>();
    if (j.contains("labels")) sc.labels = j["labels"].get<std::vector<std::string>>();
    for (const auto& t : j.at("triples")) {
        if (!t.is_array() || t.size() != 4)
            raise(ErrorCode::ConfigError, "structure constant triples must be [i, j, k, coeff]");
        std::string coeff = t[3].is_string() ? t[3].get<std::string>()
                                             : std::to_string(t[3].get<std::int64_t>());
        sc.triples.emplace_back(t[0].get<std::size_t>(), t[1].get<std::size_t>(),
                                t[2].get<std::size_t>(), parse_scalar(field, coeff));
    }
    if (j.contains("radical"))
        for (const auto& row : j["radical"]) {
            std::vector<typename F::Elem> v;
            for (const auto& c : row)
                v.push_back(parse_scalar(field, c.is_string() ? c.get<std::string>()
                                                              : std::to_string(c.get<std::int64_t>())));
            sc.radical.push_back(std::move(v));
        }
    return sc;
}

template <class F>
std::shared_ptr<const BasisAlgebra<F>> build_algebra(const F& field, const AlgebraConfig& ac) {
    using Kind = AlgebraConfig::Kind;
    switch (ac.kind) {
        case Kind::TruncatedPolynomial: return make_truncated_polynomial(ac.c, ac.a, field);
        case Kind::QuantumCI:
            return make_quantum_ci(ac.c, ac.a, parse_scalar(field, ac.q), field);
        case Kind::Exterior: return make_exterior(ac.c, field);
        case Kind::KleinFour: return make_group_algebra(builtin_klein(), field);
        case Kind::Cyclic: return make_group_algebra(builtin_cyclic(ac.group_order), field);
        case Kind::Symmetric: return make_group_algebra(builtin_symmetric(ac.group_order), field);
        case Kind::GroupTableFile:
            return make_group_algebra(parse_group_table_csv(ac.path), field);
        case Kind::StructureConstantsFile:
            return make_from_structure_constants(parse_structure_file(field, ac.path), field);
    }
    raise_internal("unknown algebra kind");
}

bool is_monomial_preset(const AlgebraConfig& ac) {
    using Kind = AlgebraConfig::Kind;
    return ac.kind == Kind::TruncatedPolynomial || ac.kind == Kind::QuantumCI ||
           ac.kind == Kind::Exterior;
}

ReportJson field_to_json(const FieldSpec& f) {
    ReportJson j;
    j["kind"] = f.kind == FieldSpec::Kind::PrimeField ? "prime" : "rationals";
    if (f.kind == FieldSpec::Kind::PrimeField) j["p"] = f.p;
    return j;
}

ReportJson input_echo(const RunConfig& cfg) {
    ReportJson j;
    j["field"] = field_to_json(cfg.field);
    if (cfg.dims_csv) {
        j["dims_csv"] = *cfg.dims_csv;
    } else if (cfg.algebra) {
        ReportJson a;
        using Kind = AlgebraConfig::Kind;
        switch (cfg.algebra->kind) {
            case Kind::TruncatedPolynomial: a["preset"] = "truncated-polynomial"; break;
            case Kind::QuantumCI: a["preset"] = "quantum-ci"; break;
            case Kind::Exterior: a["preset"] = "exterior"; break;
            case Kind::KleinFour: a["preset"] = "klein-four"; break;
            case Kind::Cyclic: a["preset"] = "cyclic"; break;
            case Kind::Symmetric: a["preset"] = "symmetric"; break;
            case Kind::GroupTableFile: a["group_table_csv"] = cfg.algebra->path; break;
            case Kind::StructureConstantsFile: a["structure_constants"] = cfg.algebra->path; break;
        }
        if (is_monomial_preset(*cfg.algebra)) {
            a["c"] = cfg.algebra->c;
            a["a"] = cfg.algebra->a;
            if (cfg.algebra->kind == Kind::QuantumCI) a["q"] = cfg.algebra->q;
        }
        if (cfg.algebra->kind == Kind::Cyclic || cfg.algebra->kind == Kind::Symmetric)
            a["n"] = cfg.algebra->group_order;
        j["algebra"] = a;
        auto module_json = [](const ModuleConfig& m) {
            ReportJson mj;
            mj["kind"] = m.kind == StandardModuleKind::Trivial   ? "trivial"
                         : m.kind == StandardModuleKind::Regular ? "regular"
                                                                 : "syzygy";
            if (m.kind == StandardModuleKind::Syzygy) mj["index"] = m.syzygy_index;
            return mj;
        };
        j["module_m"] = module_json(cfg.module_m);
        j["module_n"] = module_json(cfg.module_n);
    }
    j["n_max"] = cfg.n_max;
    switch (cfg.acting.choice) {
        case ActingRingConfig::Choice::ExtGenerators:
            j["acting_ring"] = {{"choice", "ext-generators"}, {"max_degree", cfg.acting.max_degree}};
            break;
        case ActingRingConfig::Choice::DegreeTwoOperators:
            j["acting_ring"] = {{"choice", "degree-two-operators"}};
            break;
        case ActingRingConfig::Choice::Explicit:
            j["acting_ring"] = {{"choice", "explicit"}, {"degrees", cfg.acting.degrees}};
            break;
    }
    j["guard"] = cfg.guard;
    j["seed"] = cfg.seed;
    return j;
}

std::string residues_to_text(const std::vector<std::int64_t>& rs) {
    std::string s = "{";
    for (std::size_t i = 0; i < rs.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(rs[i]);
    }
    return s + "}";
}

struct PipelineData {
    SeriesWindow dims;
    std::vector<int> acting_degrees;
    ReportJson witness = nullptr;
    std::string witness_note;
    AnalysisResult analysis;
};

template <class F>
PipelineData run_typed(const F& field, const RunConfig& cfg) {
    PipelineData data;
    const std::uint64_t characteristic = field.spec().characteristic();

    if (cfg.dims_csv) {
        data.dims.start = 0;
        data.dims.terms = parse_dims_csv(*cfg.dims_csv);
        if (cfg.acting.choice != ActingRingConfig::Choice::Explicit)
            raise(ErrorCode::ConfigError, "raw dimension windows need explicit acting degrees");
        data.acting_degrees = cfg.acting.degrees;
        data.analysis = analyze_series(data.dims, data.acting_degrees, characteristic, cfg.guard);
        return data;
    }

    auto alg = build_algebra(field, *cfg.algebra);
    FDModule<F> m = standard_module(alg, cfg.module_m.kind, cfg.module_m.syzygy_index, cfg.limits);
    FDModule<F> n = standard_module(alg, cfg.module_n.kind, cfg.module_n.syzygy_index, cfg.limits);

    std::vector<ChainOperator<F>> window_ops;
    std::optional<MinimalResolution<F>> res_m;  // resolution of M, reused for windows

    switch (cfg.acting.choice) {
        case ActingRingConfig::Choice::Explicit:
            data.acting_degrees = cfg.acting.degrees;
            break;
        case ActingRingConfig::Choice::DegreeTwoOperators: {
            if (!is_monomial_preset(*cfg.algebra))
                raise(ErrorCode::ConfigError,
                      "degree-two-operators applies to truncated-polynomial, quantum-ci, and "
                      "exterior presets only");
            data.acting_degrees.assign(cfg.algebra->c, 2);
            if (cfg.algebra->c == 1) {
                // hypersurface: the degree-2 comparison operator of the periodic tail
                res_m = minimal_resolution(alg, m, cfg.n_max + 1, cfg.limits);
                if (res_m->length() >= 4) {
                    if (auto per = detect_periodicity(*res_m))
                        window_ops.push_back(std::move(*per));
                    else
                        data.witness_note = "resolution tail is not periodic; no operator window";
                }
            }
            break;
        }
        case ActingRingConfig::Choice::ExtGenerators: {
            ExtRingGenerators<F> gens =
                ext_ring_generators(alg, cfg.acting.max_degree, cfg.limits, cfg.n_max);
            data.acting_degrees = gens.degrees;
            if (cfg.module_m.kind == StandardModuleKind::Trivial) {
                window_ops = std::move(gens.lifts);
                res_m = std::move(gens.resolution);
            } else {
                data.witness_note =
                    "cohomology operators act through the trivial module; no window for this M";
            }
            break;
        }
    }
    if (data.acting_degrees.empty())
        raise(ErrorCode::ConfigError, "no acting-ring generator degrees available");

    if (res_m) {
        HomComplex<F> hom(*res_m, n);
        data.dims.start = 0;
        for (std::size_t deg = 0; deg <= cfg.n_max; ++deg)
            data.dims.terms.push_back(static_cast<std::int64_t>(hom.ext_dim(deg)));
    } else {
        data.dims = ext_dims(alg, m, n, cfg.n_max, cfg.limits).dims;
    }

    std::int64_t holdout_from =
        cfg.holdout_from ? *cfg.holdout_from
                         : data.dims.start + (2 * data.dims.length()) / 3;
    if (holdout_from <= data.dims.start || holdout_from > data.dims.last_n() + 1)
        raise(ErrorCode::ConfigError, "holdout_from outside the computed window");
    data.analysis = analyze_series(data.dims.prefix_len(holdout_from - data.dims.start),
                                   data.acting_degrees, characteristic, cfg.guard);

    if (!window_ops.empty() && !data.dims.all_zero()) {
        std::vector<int> op_degrees;
        std::int64_t n0 = 0;
        for (const auto& op : window_ops) {
            op_degrees.push_back(static_cast<int>(op.degree));
            n0 = std::max(n0, static_cast<std::int64_t>(op.first_n));
        }
        std::int64_t d = lcm_degrees(op_degrees);
        std::int64_t n1 = static_cast<std::int64_t>(cfg.n_max) - 1;
        if (n1 - n0 + 1 > 2 * d) {
            GradedWindow<F> win = operator_window(*res_m, n, window_ops, n0, n1);
            auto wit = find_regular_element(win, d, cfg.trials, cfg.seed);
            if (wit) {
                upgrade_provenance(data.analysis, win, *wit);
                ReportJson w;
                w["degree"] = wit->degree;
                w["monomials"] = wit->monomials;
                ReportJson coeffs = ReportJson::array();
                for (const auto& c : wit->coefficients) coeffs.push_back(field.to_string(c));
                w["coefficients"] = coeffs;
                w["first_checked"] = wit->first_checked;
                w["last_checked"] = wit->last_checked;
                data.witness = w;
            } else {
                data.witness_note =
                    characteristic > 0
                        ? "no regular element found (small finite field or pre-Noetherian window)"
                        : "no regular element found on the window";
            }
        }
    }
    return data;
}

PipelineData dispatch(const RunConfig& cfg) {
    if (cfg.field.kind == FieldSpec::Kind::PrimeField)
        return run_typed(PrimeField(cfg.field.p), cfg);
    return run_typed(RationalField(), cfg);
}

}  // namespace

AnalyzeOutcome run_analyze(const RunConfig& cfg, bool include_timing) {
    auto t0 = std::chrono::steady_clock::now();
    PipelineData data = dispatch(cfg);
    const AnalysisResult& res = data.analysis;

    std::int64_t holdout_from =
        cfg.holdout_from ? *cfg.holdout_from : data.dims.start + (2 * data.dims.length()) / 3;
    ReportJson verification = nullptr;
    std::string verify_text = "verification: not applicable (m0 beyond the window)";
    std::int64_t vstart = std::max(holdout_from, res.report.m0);
    if (vstart <= data.dims.last_n()) {
        SeriesWindow holdout = data.dims.suffix_from(vstart);
        VerifyResult vr = verify_verdict(res.report, holdout);
        verification = ReportJson::object();
        verification["holdout"] = window_to_json(holdout);
        verification["pass"] = vr.pass;
        verification["counterexample_n"] =
            vr.counterexample_n ? ReportJson(*vr.counterexample_n) : ReportJson(nullptr);
        verify_text = "verification: " + std::string(vr.pass ? "pass" : "FAIL") + " (holdout " +
                      std::to_string(vstart) + ".." + std::to_string(data.dims.last_n()) + ")";
        if (!vr.pass) verify_text += " " + vr.detail;
    }

    ReportJson doc;
    doc["schema_version"] = 1;
    doc["input"] = input_echo(cfg);
    doc["ext_dims"] = window_to_json(data.dims);
    doc["analysis"] = analysis_to_json(res);
    doc["witness"] = data.witness;
    if (!data.witness_note.empty()) doc["witness_note"] = data.witness_note;
    doc["verification"] = verification;
    if (include_timing) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        doc["timing_ms"] = ms;
    }

    std::ostringstream text;
    const VanishingReport& r = res.report;
    text << "verdict: " << verdict_name(r.verdict) << "\n";
    text << "period d: " << r.period << "\n";
    text << "nonvanishing residues (mod " << r.period
         << "): " << residues_to_text(r.nonvanishing_residues) << "\n";
    text << "m0: " << r.m0 << "\n";
    text << "provenance: " << provenance_name(r.provenance) << "\n";
    if (r.minimal_period != r.period) text << "minimal period: " << r.minimal_period << "\n";
    if (r.period == 2 && r.nonvanishing_residues.size() == 1)
        text << "pattern: nonzero for all " << (r.nonvanishing_residues[0] == 0 ? "even" : "odd")
             << " n >= " << r.m0 << "\n";
    if (r.period == 2 && r.nonvanishing_residues.size() == 2)
        text << "pattern: nonzero in both parity classes from " << r.m0 << " on\n";
    if (!r.note.empty()) text << "note: " << r.note << "\n";
    if (!data.witness.is_null())
        text << "regular element: degree " << data.witness["degree"].get<std::int64_t>()
             << ", injective on [" << data.witness["first_checked"].get<std::int64_t>() << ", "
             << data.witness["last_checked"].get<std::int64_t>() << "]\n";
    text << verify_text << "\n";

    return AnalyzeOutcome{std::move(doc), text.str()};
}

namespace {

template <class F>
std::string ext_csv_typed(const F& field, const RunConfig& cfg) {
    if (!cfg.algebra) raise(ErrorCode::ConfigError, "ext needs an algebra");
    auto alg = build_algebra(field, *cfg.algebra);
    FDModule<F> m = standard_module(alg, cfg.module_m.kind, cfg.module_m.syzygy_index, cfg.limits);
    FDModule<F> n = standard_module(alg, cfg.module_n.kind, cfg.module_n.syzygy_index, cfg.limits);
    ExtSequence seq = ext_dims(alg, m, n, cfg.n_max, cfg.limits);
    std::ostringstream out;
    out << "n,dim\n";
    for (std::int64_t i = 0; i < seq.dims.length(); ++i)
        out << i << "," << seq.dims.terms[static_cast<std::size_t>(i)] << "\n";
    return out.str();
}

template <class F>
std::string resolve_csv_typed(const F& field, const RunConfig& cfg) {
    if (!cfg.algebra) raise(ErrorCode::ConfigError, "resolve needs an algebra");
    auto alg = build_algebra(field, *cfg.algebra);
    FDModule<F> m = standard_module(alg, cfg.module_m.kind, cfg.module_m.syzygy_index, cfg.limits);
    MinimalResolution<F> res = minimal_resolution(alg, m, cfg.n_max, cfg.limits);
    std::ostringstream out;
    out << "n,generators\n";
    for (std::size_t n = 0; n < res.betti.size(); ++n) out << n << "," << res.betti[n] << "\n";
    return out.str();
}

}  // namespace

std::string run_ext_csv(const RunConfig& cfg) {
    if (cfg.field.kind == FieldSpec::Kind::PrimeField)
        return ext_csv_typed(PrimeField(cfg.field.p), cfg);
    return ext_csv_typed(RationalField(), cfg);
}

std::string run_resolve_csv(const RunConfig& cfg) {
    if (cfg.field.kind == FieldSpec::Kind::PrimeField)
        return resolve_csv_typed(PrimeField(cfg.field.p), cfg);
    return resolve_csv_typed(RationalField(), cfg);
}

int exit_code_for(const Error& e) {
    switch (e.code()) {
        case ErrorCode::NoetherianHypothesisViolatedOnWindow: return 2;
        case ErrorCode::DimensionCap:
        case ErrorCode::OverflowGuard: return 3;
        case ErrorCode::Internal: return 70;
        default: return 1;
    }
}

}  // namespace extvan
