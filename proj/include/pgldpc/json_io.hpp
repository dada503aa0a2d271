#pragma once

#include <json.hpp>
#include <string>

#include "pgldpc/code_analysis.hpp"
#include "pgldpc/constructions.hpp"
#include "pgldpc/decoder.hpp"
#include "pgldpc/enumerate.hpp"
#include "pgldpc/plane.hpp"
#include "pgldpc/pseudoweight.hpp"

namespace pgldpc {

using OrderedJson = nlohmann::ordered_json;

OrderedJson matrix_json(int q, const BinaryMatrix& H);
OrderedJson cone_json(int q, const ConeSystem& cone);
OrderedJson rayset_json(const RaySet& rays);
OrderedJson code_json(int q, const CodeSummary& code);
OrderedJson certificate_json(const BoundCertificate& cert);
OrderedJson construction_json(const LineConstruction& c, const MinimalityCertificate* cert);

std::string weight_enumerator_csv(const CodeSummary& code);
std::string spectrum_csv(const SpectrumReport& spec);
std::string sim_csv_header();
std::string sim_csv_row(const SimReport& rep);

/// Serialize with a fixed layout so identical inputs give identical bytes.
std::string dump_json(const OrderedJson& j);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace pgldpc
