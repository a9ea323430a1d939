#pragma once

#include <optional>
#include <string>

#include "glcoh/poincare.hpp"
#include "glcoh/sandwich.hpp"
#include "glcoh/shapes.hpp"

namespace glcoh {

enum class PathChoice { orbit, sandwich, both };

/// Self-describing computation result consumed by the serializers. The JSON
/// form is deterministic (sorted keys, no timing data); elapsed time appears
/// only in the pretty rendering.
struct ResultDocument {
    std::string kind;  // sym | gamma | tensor | ext
    std::string params_text;
    std::optional<Partition> mu;
    std::optional<int> d;
    std::optional<std::string> left, right;  // ext tuples
    long long p = 0;
    int r = 0;
    std::optional<std::string> path;  // orbit | sandwich | both
    PoincareSeries series;
    std::optional<PoincareSeries> series_sandwich;  // second path when both
    std::optional<bool> agree;
    long long elapsed_ms = 0;
};

ResultDocument cmd_sym(const Partition& mu, long long p, int r,
                       PathChoice path, const Prop23Options& opts = {});
ResultDocument cmd_gamma(long long p, int r);
ResultDocument cmd_tensor(int d, long long p, int r);
ResultDocument cmd_ext(const SkewTuple& left, const SkewTuple& right,
                       long long p, int r, const Prop23Options& opts = {});

std::string to_json(const ResultDocument& doc);
std::string to_csv(const ResultDocument& doc);
std::string to_pretty(const ResultDocument& doc);

}  // namespace glcoh
