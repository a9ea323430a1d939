#include "glcoh/document.hpp"

#include <chrono>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "glcoh/bimodule.hpp"
#include "glcoh/coinvariants.hpp"
#include "glcoh/formulas.hpp"

namespace glcoh {

namespace {

constexpr const char* kEngineVersion = "1.0.0";

long long now_ms() {
    using namespace std::chrono;
    return duration_cast<milliseconds>(steady_clock::now().time_since_epoch())
        .count();
}

nlohmann::json int_to_json(const Int& v) {
    // exact when it fits a 64-bit integer, decimal string beyond
    if (v >= std::numeric_limits<long long>::min() &&
        v <= std::numeric_limits<long long>::max())
        return v.convert_to<long long>();
    return v.str();
}

nlohmann::json series_to_json(const PoincareSeries& s) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [deg, coeff] : s.sparse())
        arr.push_back({deg, int_to_json(coeff)});
    return arr;
}

}  // namespace

ResultDocument cmd_sym(const Partition& mu, long long p, int r,
                       PathChoice path, const Prop23Options& opts) {
    long long t0 = now_ms();
    ResultDocument doc;
    doc.kind = "sym";
    doc.mu = mu;
    doc.p = p;
    doc.r = r;
    doc.params_text = "mu=(" + mu.to_string() + ") p=" + std::to_string(p) +
                      " r=" + std::to_string(r);
    switch (path) {
        case PathChoice::orbit:
            doc.path = "orbit";
            doc.series = theorem1_series(mu, p, r);
            break;
        case PathChoice::sandwich:
            doc.path = "sandwich";
            doc.series = prop23_series(mu, p, r, opts);
            break;
        case PathChoice::both:
            doc.path = "both";
            doc.series = theorem1_series(mu, p, r);
            doc.series_sandwich = prop23_series(mu, p, r, opts);
            doc.agree = doc.series == *doc.series_sandwich;
            break;
    }
    doc.elapsed_ms = now_ms() - t0;
    return doc;
}

ResultDocument cmd_gamma(long long p, int r) {
    long long t0 = now_ms();
    ResultDocument doc;
    doc.kind = "gamma";
    doc.p = p;
    doc.r = r;
    doc.params_text = "p=" + std::to_string(p) + " r=" + std::to_string(r);
    doc.series = gamma_p_series(p, r);
    doc.elapsed_ms = now_ms() - t0;
    return doc;
}

ResultDocument cmd_tensor(int d, long long p, int r) {
    long long t0 = now_ms();
    ResultDocument doc;
    doc.kind = "tensor";
    doc.d = d;
    doc.p = p;
    doc.r = r;
    doc.params_text = "d=" + std::to_string(d) + " p=" + std::to_string(p) +
                      " r=" + std::to_string(r);
    doc.series = total_series(build_tensor_cohomology(d, p, r));
    doc.elapsed_ms = now_ms() - t0;
    return doc;
}

ResultDocument cmd_ext(const SkewTuple& left, const SkewTuple& right,
                       long long p, int r, const Prop23Options& opts) {
    long long t0 = now_ms();
    ResultDocument doc;
    doc.kind = "ext";
    doc.left = left.to_string();
    doc.right = right.to_string();
    doc.p = p;
    doc.r = r;
    doc.params_text = "left=(" + *doc.left + ") right=(" + *doc.right +
                      ") p=" + std::to_string(p) + " r=" + std::to_string(r);
    doc.series = ext_series(left, right, p, r, opts);
    doc.elapsed_ms = now_ms() - t0;
    return doc;
}

std::string to_json(const ResultDocument& doc) {
    nlohmann::json j;  // nlohmann objects keep keys sorted
    nlohmann::json params;
    params["kind"] = doc.kind;
    params["p"] = doc.p;
    params["r"] = doc.r;
    if (doc.mu) params["mu"] = doc.mu->parts();
    if (doc.d) params["d"] = *doc.d;
    if (doc.left) params["left"] = *doc.left;
    if (doc.right) params["right"] = *doc.right;
    if (doc.path) params["path"] = *doc.path;
    j["params"] = params;
    j["series"] = series_to_json(doc.series);
    if (doc.series_sandwich)
        j["series_sandwich"] = series_to_json(*doc.series_sandwich);
    if (doc.agree) j["agree"] = *doc.agree;
    j["euler_char"] = int_to_json(doc.series.euler_characteristic());
    auto top = doc.series.top_degree();
    if (top)
        j["top_degree"] = *top;
    else
        j["top_degree"] = nullptr;
    j["meta"] = {{"engine", "glcoh"}, {"version", kEngineVersion}};
    return j.dump(2) + "\n";
}

std::string to_csv(const ResultDocument& doc) {
    std::ostringstream out;
    out << "degree,dimension\n";
    for (const auto& [deg, coeff] : doc.series.sparse())
        out << deg << "," << coeff.str() << "\n";
    return out.str();
}

std::string to_pretty(const ResultDocument& doc) {
    std::ostringstream out;
    out << doc.kind << " " << doc.params_text << "\n";
    out << "  series: " << doc.series.to_string() << "\n";
    if (doc.series_sandwich)
        out << "  sandwich path: " << doc.series_sandwich->to_string() << "\n";
    if (doc.agree)
        out << "  paths agree: " << (*doc.agree ? "yes" : "NO") << "\n";
    out << "  euler characteristic: " << doc.series.euler_characteristic()
        << "\n";
    auto top = doc.series.top_degree();
    out << "  top degree: ";
    if (top)
        out << *top;
    else
        out << "none";
    out << "\n";
    out << "  total dimension: " << doc.series.value_at_one() << "\n";
    out << "  elapsed: " << doc.elapsed_ms << " ms\n";
    return out.str();
}

}  // namespace glcoh
