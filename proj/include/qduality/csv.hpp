#pragma once

#include <span>
#include <string>

#include "qduality/verify.hpp"

namespace qduality {

// Flat CSV schema, version 1: header row, comma separators, '.' decimal,
// numbers rendered with 17 significant digits so doubles round-trip exactly.
// Werner sweeps replace the sample_id column with the (w, a) grid point and
// carry seed = 0, rank = 0 since the family is parametric, not sampled.
inline constexpr int kCsvSchemaVersion = 1;

extern const char* const kCampaignCsvHeader;
extern const char* const kWernerCsvHeader;
extern const char* const kAxiomCsvHeader;

std::string format_double(double v);  // printf %.17g equivalent, locale-free

std::string campaign_csv(std::span<const TradeoffRecord> records);
std::string werner_csv(std::span<const WernerRecord> records);
std::string axiom_csv(std::span<const AxiomReport> reports);

void write_text_file(const std::string& path, const std::string& contents);

}  // namespace qduality
