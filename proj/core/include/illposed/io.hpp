#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "illposed/adversarial.hpp"
#include "illposed/spectral.hpp"
#include "illposed/stability.hpp"

namespace illposed {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "illposed/1";

// Serializes with every float printed as %.17g.
std::string dump_json(const Json& j, int indent = 2);
std::string format_real(double x);

Json to_json(const MatchReport& r);
Json to_json(const DecayFit& f);
Json to_json(const SpectralDecomposition& d, bool with_vectors = false);
Json to_json(const GramianReport& r);
Json to_json(const FigureResult& r);
Json to_json(const StabilityFit& f);
Json to_json(const StabilityRecord& r);

void write_spectrum_csv(std::ostream& os, const SpectralDecomposition& d);
void write_stiffness_csv(std::ostream& os, const GalerkinOperator& op);
void write_pairs_csv(std::ostream& os, const std::string& header, const std::vector<double>& x,
                     const std::vector<double>& y);

void write_text(const std::filesystem::path& path, const std::string& content);

}  // namespace illposed
