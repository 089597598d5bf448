#include "eigenflow/io.hpp"

#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "eigenflow/jungreis.hpp"

namespace eigenflow::io {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

namespace {

void append_double(std::string& out, double v) { out += format_double(v); }

ordered_json complex_json(const Complex& z) { return ordered_json::array({z.real(), z.imag()}); }

}  // namespace

std::string eigens_csv(const spectra::EigenSet& es) {
    std::string out = "family,k,index,re_lambda,im_lambda,re_recip,im_recip,modulus_recip,residual\n";
    for (const auto& rec : es.records) {
        out += spectra::family_name(rec.family);
        out += ',';
        out += std::to_string(rec.k);
        out += ',';
        out += std::to_string(rec.index);
        out += ',';
        append_double(out, rec.lambda.real());
        out += ',';
        append_double(out, rec.lambda.imag());
        out += ',';
        append_double(out, rec.reciprocal.real());
        out += ',';
        append_double(out, rec.reciprocal.imag());
        out += ',';
        append_double(out, rec.modulus_recip);
        out += ',';
        append_double(out, rec.residual);
        out += '\n';
    }
    return out;
}

std::string table1_csv(const std::vector<stats::UnitCircleRow>& rows) {
    std::string out = "n,pct_within,total,within,left_out\n";
    for (const auto& row : rows) {
        out += std::to_string(row.n);
        out += ',';
        append_double(out, row.pct_within);
        out += ',';
        out += std::to_string(row.total);
        out += ',';
        out += std::to_string(row.within);
        out += ',';
        out += std::to_string(row.left_out);
        out += '\n';
    }
    return out;
}

std::string bins_csv(const std::vector<stats::BinHistogram>& hists) {
    std::string out = "n,bin_start,bin_end,count\n";
    for (const auto& h : hists) {
        for (const auto& [idx, count] : h.counts) {
            if (count == 0) continue;
            out += std::to_string(h.n);
            out += ',';
            append_double(out, h.lower_edge(idx));
            out += ',';
            append_double(out, h.upper_edge(idx));
            out += ',';
            out += std::to_string(count);
            out += '\n';
        }
    }
    return out;
}

std::string classify_csv(const std::vector<dynamics::ClassTableRow>& rows) {
    std::string out = "n,hyperbolic,misiurewicz,parabolic,siegel,classified_total,grand_total,others\n";
    for (const auto& row : rows) {
        out += std::to_string(row.n);
        out += ',';
        out += std::to_string(row.hyperbolic);
        out += ',';
        out += std::to_string(row.misiurewicz);
        out += ',';
        out += std::to_string(row.parabolic);
        out += ',';
        out += std::to_string(row.siegel);
        out += ',';
        out += std::to_string(row.classified_total);
        out += ',';
        out += std::to_string(row.grand_total);
        out += ',';
        out += std::to_string(row.others);
        out += '\n';
    }
    return out;
}

std::string fits_json(const stats::LogisticFit& logistic, const stats::ExpDecayFit& exp_decay) {
    ordered_json j;
    j["logistic"] = {{"L", logistic.L}, {"k", logistic.k}, {"x0", logistic.x0},
                     {"sse", logistic.sse}};
    j["exp_decay"] = {{"b", exp_decay.b},
                      {"c", exp_decay.c},
                      {"anchor", {{"x", 10.0}, {"f", 100.0}}},
                      {"sse", exp_decay.sse}};
    return j.dump(1) + "\n";
}

std::string jungreis_json() {
    ordered_json arr = ordered_json::array();
    const auto& series = jungreis::coefficients();
    for (std::size_t i = 0; i < series.coefficients.size(); ++i) {
        const auto& r = series.coefficients[i];
        arr.push_back({{"k", static_cast<int>(i) + 1},
                       {"numerator", r.numerator.str()},
                       {"denominator", r.denominator.str()}});
    }
    return arr.dump(1) + "\n";
}

std::string homotopy_params_json(const homotopy::HomotopySpec& spec,
                                 const homotopy::TuningParams& tuning) {
    ordered_json j;
    j["kind"] = homotopy::kind_name(spec.kind);
    j["tuning"] = {{"c0", complex_json(tuning.c0)},
                   {"c_prime", complex_json(tuning.c_prime)},
                   {"scale", tuning.scale}};
    j["rotated_cardioid"] = {{"center", complex_json(spec.rotated.center)},
                             {"rotation", spec.rotated.rotation},
                             {"s_start", spec.rotated.s_start},
                             {"s_end", spec.rotated.s_end}};
    j["radial_bulb"] = {{"center", complex_json(spec.radial.center)},
                        {"r0", spec.radial.r0},
                        {"r1", spec.radial.r1}};
    j["rotated_translate"] = spec.rotated_translate;
    j["jungreis_m"] = spec.jungreis_m;
    if (spec.kind == homotopy::HomotopyKind::linear)
        j["linear_target"] = complex_json(spec.linear_target);
    return j.dump(1) + "\n";
}

std::string snapshots_csv(const spectra::EigenSet& es, const homotopy::HomotopySpec& spec,
                          const std::vector<double>& ts) {
    std::string out =
        "family,k,index,re_lambda,im_lambda,re_recip,im_recip,modulus_recip,residual,t,kind,note\n";
    for (double t : ts) {
        for (const auto& rec : es.records) {
            const Complex moved = spec.apply(rec.reciprocal, t);
            out += spectra::family_name(rec.family);
            out += ',';
            out += std::to_string(rec.k);
            out += ',';
            out += std::to_string(rec.index);
            out += ',';
            append_double(out, rec.lambda.real());
            out += ',';
            append_double(out, rec.lambda.imag());
            out += ',';
            append_double(out, moved.real());
            out += ',';
            append_double(out, moved.imag());
            out += ',';
            append_double(out, std::abs(moved));
            out += ',';
            append_double(out, rec.residual);
            out += ',';
            append_double(out, t);
            out += ',';
            out += homotopy::kind_name(spec.kind);
            out += ',';
            if (spec.kind == homotopy::HomotopyKind::jungreis && std::abs(rec.reciprocal) < 1.0)
                out += "extrapolated";
            out += '\n';
        }
    }
    return out;
}

std::string density_csv(const std::vector<double>& angles,
                        const std::vector<double>& distances) {
    std::string out = "angle,distance\n";
    for (std::size_t i = 0; i < angles.size(); ++i) {
        append_double(out, angles[i]);
        out += ',';
        append_double(out, distances[i]);
        out += '\n';
    }
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path + " for writing");
    out << content;
    if (!out) throw Error("failed writing " + path);
}

}  // namespace eigenflow::io
