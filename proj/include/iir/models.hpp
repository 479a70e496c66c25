#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "iir/model.hpp"

namespace iir::models {

/// Built-in model names:
///   stat-poisson-limit, stat-binomial, mm-full, mm-reduced, flow
ModelSpec builtin(const std::string& name);

std::vector<std::string> builtin_names();

/// Published data realisations, embedded verbatim. "stat" (10 values, shared
/// by both stat variants) and "flow" (19 values). Requesting "mm" throws: no
/// realisation was published; generate synthetic data with mm_synthetic_data.
Dataset published_dataset(const std::string& model_name);

/// Synthetic Michaelis-Menten data: N(B_obs s(theta_true), sigma^2) with a
/// seeded deterministic draw.
Dataset mm_synthetic_data(const ModelSpec& mm_model, std::uint64_t seed);

/// Dataset for a model per the data source convention used by the CLI:
/// published where available, otherwise seeded synthetic (MM).
Dataset default_dataset(const ModelSpec& model, std::uint64_t seed);

// Closed-form flow solution constants (length units).
constexpr double kFlowLength = 100.0;
constexpr int kFinePoints = 201;

}  // namespace iir::models
