// Result structs -> JSON documents with stable key order.
#pragma once

#include <json.hpp>

#include "ck/adf.hpp"
#include "ck/diagnostics.hpp"
#include "ck/engle_granger.hpp"
#include "ck/johansen.hpp"
#include "ck/var_select.hpp"
#include "ck/vecm.hpp"

namespace cli {

nlohmann::ordered_json adf_json(const ck::AdfResult& r);
nlohmann::ordered_json eg_json(const ck::EngleGrangerResult& r);
nlohmann::ordered_json lags_json(const ck::LagSelection& r);
nlohmann::ordered_json johansen_json(const ck::JohansenResult& r);
nlohmann::ordered_json vecm_json(const ck::VecmFit& r);
nlohmann::ordered_json block_json(const ck::BlockTest& r);
nlohmann::ordered_json diag_json(const ck::DiagnosticResult& r);

}  // namespace cli
