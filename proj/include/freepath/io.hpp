#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "freepath/asymptotics.hpp"
#include "freepath/kloosterman.hpp"
#include "freepath/moments.hpp"
#include "freepath/reflections.hpp"
#include "freepath/scatterers.hpp"

namespace freepath {

using Json = nlohmann::ordered_json;

// Floats are emitted at 12 significant digits in both formats.
std::string format_double(double v);
double round12(double v);

std::string to_string(ScattererKind kind);
std::string to_string(HitKind kind);
std::string to_string(MomentMethod method);
std::string to_string(MomentQuantity quantity);
std::string to_string(TheoremId id);
std::string to_string(ReflectionBranch branch);
std::string to_string(ReflectionArc arc);

ScattererKind scatterer_kind_from(const std::string& name);
HitKind hit_kind_from(const std::string& name);
MomentMethod moment_method_from(const std::string& name);
MomentQuantity moment_quantity_from(const std::string& name);
TheoremId theorem_id_from(const std::string& name);
ReflectionBranch reflection_branch_from(const std::string& name);
ReflectionArc reflection_arc_from(const std::string& name);

void to_json(Json& j, const FareyFraction& f);
void from_json(const Json& j, FareyFraction& f);
void to_json(Json& j, const FareyPair& p);
void from_json(const Json& j, FareyPair& p);
void to_json(Json& j, const ExitEvent& e);
void from_json(const Json& j, ExitEvent& e);
void to_json(Json& j, const EpsilonPM& e);
void from_json(const Json& j, EpsilonPM& e);
void to_json(Json& j, const KloostermanValue& v);
void from_json(const Json& j, KloostermanValue& v);
void to_json(Json& j, const ReflectionCount& r);
void from_json(const Json& j, ReflectionCount& r);
void to_json(Json& j, const AngleInterval& I);
void from_json(const Json& j, AngleInterval& I);
void to_json(Json& j, const MomentEstimate& m);
void from_json(const Json& j, MomentEstimate& m);
void to_json(Json& j, const SweepRow& r);
void from_json(const Json& j, SweepRow& r);
void to_json(Json& j, const SqueezeRow& r);
void from_json(const Json& j, SqueezeRow& r);
void to_json(Json& j, const SweepReport& r);
void from_json(const Json& j, SweepReport& r);

// CSV blocks: fixed header line then one row per record.
std::string csv_table(const std::vector<ExitEvent>& rows);
std::string csv_table(const std::vector<KloostermanValue>& rows);
std::string csv_table(const std::vector<MomentEstimate>& rows);
std::string csv_table(const std::vector<ReflectionCount>& rows);
std::string csv_table(const std::vector<FareyFraction>& rows);
std::string csv_table(const std::vector<FareyPair>& rows);
std::string csv_table(const std::vector<EpsilonPM>& rows);
// Sweep report: a row table and, when present, a squeeze table after a blank line.
std::string csv_table(const SweepReport& report);

}  // namespace freepath
