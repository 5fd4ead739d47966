#pragma once

#include "zhat/brieskorn.hpp"
#include "zhat/compare.hpp"
#include "zhat/qseries.hpp"
#include "zhat/zhat_engine.hpp"

#include <json.hpp>

namespace zhat {

using Json = nlohmann::ordered_json;

/// Every rational is rendered as an exact "num/den" (or "num") string. from* functions
/// throw FormatError on malformed documents.
Json toJson(const QSeries& s);
QSeries qseriesFromJson(const Json& j);

Json toJson(const SpinCRep& a);
SpinCRep spinCFromJson(const Json& j);

Json toJson(const ZhatResult& r);
ZhatResult zhatResultFromJson(const Json& j);

Json toJson(const BrieskornData& d);
BrieskornData brieskornDataFromJson(const Json& j);

Json toJson(const ComparisonRow& r);
ComparisonRow comparisonRowFromJson(const Json& j);

Json toJson(const CounterexampleReport& r);

}  // namespace zhat
