#include "freepath/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace freepath {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

double round12(double v) { return std::atof(format_double(v).c_str()); }

namespace {

template <class T>
T lookup(const std::string& name, std::initializer_list<std::pair<const char*, T>> table,
         const char* what) {
  for (const auto& [key, value] : table) {
    if (name == key) return value;
  }
  throw std::invalid_argument(std::string("unknown ") + what + ": " + name);
}

}  // namespace

std::string to_string(ScattererKind kind) {
  switch (kind) {
    case ScattererKind::Disk: return "disk";
    case ScattererKind::Cross: return "cross";
    case ScattererKind::Vertical: return "vertical";
    case ScattererKind::VariableVertical: return "varvertical";
  }
  return "?";
}

std::string to_string(HitKind kind) {
  switch (kind) {
    case HitKind::VerticalArm: return "vertical_arm";
    case HitKind::HorizontalArm: return "horizontal_arm";
    case HitKind::DiskBoundary: return "disk_boundary";
  }
  return "?";
}

std::string to_string(MomentMethod method) {
  switch (method) {
    case MomentMethod::FareyExact: return "farey_exact";
    case MomentMethod::FareyQuadrature: return "farey_quadrature";
    case MomentMethod::BruteForceQuadrature: return "brute_force_quadrature";
  }
  return "?";
}

std::string to_string(MomentQuantity quantity) {
  return quantity == MomentQuantity::ExitLength ? "exit_length" : "reflections";
}

std::string to_string(TheoremId id) {
  switch (id) {
    case TheoremId::T1_1: return "T1_1";
    case TheoremId::T1_2: return "T1_2";
    case TheoremId::T1_4: return "T1_4";
    case TheoremId::T1_5: return "T1_5";
    case TheoremId::T3_2: return "T3_2";
  }
  return "?";
}

std::string to_string(ReflectionBranch branch) {
  switch (branch) {
    case ReflectionBranch::LeftDenSmaller: return "left_den_smaller";
    case ReflectionBranch::RightDenSmallerEarly: return "right_den_smaller_early";
    case ReflectionBranch::RightDenSmallerLate: return "right_den_smaller_late";
  }
  return "?";
}

std::string to_string(ReflectionArc arc) {
  switch (arc) {
    case ReflectionArc::LeftPoint: return "left_point";
    case ReflectionArc::LeftPointExtra: return "left_point_extra";
    case ReflectionArc::RightPoint: return "right_point";
  }
  return "?";
}

ScattererKind scatterer_kind_from(const std::string& name) {
  return lookup<ScattererKind>(name,
                               {{"disk", ScattererKind::Disk},
                                {"cross", ScattererKind::Cross},
                                {"vertical", ScattererKind::Vertical},
                                {"varvertical", ScattererKind::VariableVertical}},
                               "scatterer kind");
}

HitKind hit_kind_from(const std::string& name) {
  return lookup<HitKind>(name,
                         {{"vertical_arm", HitKind::VerticalArm},
                          {"horizontal_arm", HitKind::HorizontalArm},
                          {"disk_boundary", HitKind::DiskBoundary}},
                         "hit kind");
}

MomentMethod moment_method_from(const std::string& name) {
  return lookup<MomentMethod>(name,
                              {{"farey_exact", MomentMethod::FareyExact},
                               {"farey_quadrature", MomentMethod::FareyQuadrature},
                               {"brute_force_quadrature", MomentMethod::BruteForceQuadrature}},
                              "moment method");
}

MomentQuantity moment_quantity_from(const std::string& name) {
  return lookup<MomentQuantity>(name,
                                {{"exit_length", MomentQuantity::ExitLength},
                                 {"reflections", MomentQuantity::Reflections}},
                                "moment quantity");
}

TheoremId theorem_id_from(const std::string& name) {
  return lookup<TheoremId>(name,
                           {{"T1_1", TheoremId::T1_1},
                            {"T1_2", TheoremId::T1_2},
                            {"T1_4", TheoremId::T1_4},
                            {"T1_5", TheoremId::T1_5},
                            {"T3_2", TheoremId::T3_2}},
                           "theorem id");
}

ReflectionBranch reflection_branch_from(const std::string& name) {
  return lookup<ReflectionBranch>(
      name,
      {{"left_den_smaller", ReflectionBranch::LeftDenSmaller},
       {"right_den_smaller_early", ReflectionBranch::RightDenSmallerEarly},
       {"right_den_smaller_late", ReflectionBranch::RightDenSmallerLate}},
      "reflection branch");
}

ReflectionArc reflection_arc_from(const std::string& name) {
  return lookup<ReflectionArc>(name,
                               {{"left_point", ReflectionArc::LeftPoint},
                                {"left_point_extra", ReflectionArc::LeftPointExtra},
                                {"right_point", ReflectionArc::RightPoint}},
                               "reflection arc");
}

void to_json(Json& j, const FareyFraction& f) { j = Json{{"num", f.num}, {"den", f.den}}; }

void from_json(const Json& j, FareyFraction& f) {
  j.at("num").get_to(f.num);
  j.at("den").get_to(f.den);
}

void to_json(Json& j, const FareyPair& p) {
  j = Json{{"left", p.left}, {"right", p.right}, {"order", p.order}};
}

void from_json(const Json& j, FareyPair& p) {
  j.at("left").get_to(p.left);
  j.at("right").get_to(p.right);
  j.at("order").get_to(p.order);
}

void to_json(Json& j, const ExitEvent& e) {
  j = Json{{"omega", round12(e.omega)},
           {"length", round12(e.length)},
           {"q", e.q},
           {"a", e.a},
           {"hit", to_string(e.hit)}};
}

void from_json(const Json& j, ExitEvent& e) {
  j.at("omega").get_to(e.omega);
  j.at("length").get_to(e.length);
  j.at("q").get_to(e.q);
  j.at("a").get_to(e.a);
  e.hit = hit_kind_from(j.at("hit").get<std::string>());
}

void to_json(Json& j, const EpsilonPM& e) {
  j = Json{{"q", e.q},
           {"a", e.a},
           {"eps_minus", round12(e.eps_minus)},
           {"eps_plus", round12(e.eps_plus)}};
}

void from_json(const Json& j, EpsilonPM& e) {
  j.at("q").get_to(e.q);
  j.at("a").get_to(e.a);
  j.at("eps_minus").get_to(e.eps_minus);
  j.at("eps_plus").get_to(e.eps_plus);
}

void to_json(Json& j, const KloostermanValue& v) {
  j = Json{{"m", v.m},
           {"n", v.n},
           {"q", v.q},
           {"value", round12(v.value)},
           {"imag_residual", round12(v.imag_residual)},
           {"weil_bound", round12(v.weil_bound)}};
}

void from_json(const Json& j, KloostermanValue& v) {
  j.at("m").get_to(v.m);
  j.at("n").get_to(v.n);
  j.at("q").get_to(v.q);
  j.at("value").get_to(v.value);
  j.at("imag_residual").get_to(v.imag_residual);
  j.at("weil_bound").get_to(v.weil_bound);
}

void to_json(Json& j, const ReflectionCount& r) {
  j = Json{{"omega", round12(r.omega)},
           {"count", r.count},
           {"branch", to_string(r.branch)},
           {"arc", to_string(r.arc)},
           {"pair", r.pair}};
}

void from_json(const Json& j, ReflectionCount& r) {
  j.at("omega").get_to(r.omega);
  j.at("count").get_to(r.count);
  r.branch = reflection_branch_from(j.at("branch").get<std::string>());
  r.arc = reflection_arc_from(j.at("arc").get<std::string>());
  j.at("pair").get_to(r.pair);
}

void to_json(Json& j, const AngleInterval& I) {
  j = Json{{"alpha", round12(I.alpha)}, {"beta", round12(I.beta)}};
}

void from_json(const Json& j, AngleInterval& I) {
  j.at("alpha").get_to(I.alpha);
  j.at("beta").get_to(I.beta);
}

void to_json(Json& j, const MomentEstimate& m) {
  j = Json{{"epsilon", round12(m.epsilon)},
           {"r", round12(m.r)},
           {"interval", m.interval},
           {"method", to_string(m.method)},
           {"scaled_value", round12(m.scaled_value)},
           {"main_term", round12(m.main_term)},
           {"deviation", round12(m.deviation)}};
}

void from_json(const Json& j, MomentEstimate& m) {
  j.at("epsilon").get_to(m.epsilon);
  j.at("r").get_to(m.r);
  j.at("interval").get_to(m.interval);
  m.method = moment_method_from(j.at("method").get<std::string>());
  j.at("scaled_value").get_to(m.scaled_value);
  j.at("main_term").get_to(m.main_term);
  j.at("deviation").get_to(m.deviation);
}

void to_json(Json& j, const SweepRow& r) {
  j = Json{{"epsilon", round12(r.epsilon)},
           {"r", round12(r.r)},
           {"interval", r.interval},
           {"scaled_value", round12(r.scaled_value)},
           {"main_term", round12(r.main_term)},
           {"deviation", round12(r.deviation)},
           {"predicted_bound", round12(r.predicted_bound)},
           {"pass", r.row_pass}};
}

void from_json(const Json& j, SweepRow& r) {
  j.at("epsilon").get_to(r.epsilon);
  j.at("r").get_to(r.r);
  j.at("interval").get_to(r.interval);
  j.at("scaled_value").get_to(r.scaled_value);
  j.at("main_term").get_to(r.main_term);
  j.at("deviation").get_to(r.deviation);
  j.at("predicted_bound").get_to(r.predicted_bound);
  j.at("pass").get_to(r.row_pass);
}

void to_json(Json& j, const SqueezeRow& r) {
  j = Json{{"epsilon", round12(r.epsilon)},
           {"r", round12(r.r)},
           {"j", r.j},
           {"interval", r.interval},
           {"q_plus", r.q_plus},
           {"q_minus", r.q_minus},
           {"lower", round12(r.lower)},
           {"direct", round12(r.direct)},
           {"upper", round12(r.upper)},
           {"contained", r.contained}};
}

void from_json(const Json& j, SqueezeRow& r) {
  j.at("epsilon").get_to(r.epsilon);
  j.at("r").get_to(r.r);
  j.at("j").get_to(r.j);
  j.at("interval").get_to(r.interval);
  j.at("q_plus").get_to(r.q_plus);
  j.at("q_minus").get_to(r.q_minus);
  j.at("lower").get_to(r.lower);
  j.at("direct").get_to(r.direct);
  j.at("upper").get_to(r.upper);
  j.at("contained").get_to(r.contained);
}

void to_json(Json& j, const SweepReport& r) {
  j = Json{{"theorem", to_string(r.theorem)},
           {"rows", r.rows},
           {"squeeze", r.squeeze},
           {"pass", r.pass}};
}

void from_json(const Json& j, SweepReport& r) {
  r.theorem = theorem_id_from(j.at("theorem").get<std::string>());
  j.at("rows").get_to(r.rows);
  j.at("squeeze").get_to(r.squeeze);
  j.at("pass").get_to(r.pass);
}

namespace {

const char* const kExitHeader = "omega,length,q,a,hit";
const char* const kKloostermanHeader = "m,n,q,value,imag_residual,weil_bound";
const char* const kMomentHeader = "epsilon,r,alpha,beta,method,scaled_value,main_term,deviation";
const char* const kReflectionHeader = "omega,count,branch,arc,a,q,a_prime,q_prime,order";
const char* const kFractionHeader = "num,den";
const char* const kPairHeader = "a,q,a_prime,q_prime,order";
const char* const kEpsilonPMHeader = "q,a,eps_minus,eps_plus";
const char* const kSweepHeader =
    "theorem,epsilon,r,alpha,beta,scaled_value,main_term,deviation,predicted_bound,pass";
const char* const kSqueezeHeader =
    "theorem,epsilon,r,j,alpha,beta,q_plus,q_minus,lower,direct,upper,contained";

}  // namespace

std::string csv_table(const std::vector<ExitEvent>& rows) {
  std::ostringstream out;
  out << kExitHeader << '\n';
  for (const auto& e : rows) {
    out << format_double(e.omega) << ',' << format_double(e.length) << ',' << e.q << ',' << e.a
        << ',' << to_string(e.hit) << '\n';
  }
  return out.str();
}

std::string csv_table(const std::vector<KloostermanValue>& rows) {
  std::ostringstream out;
  out << kKloostermanHeader << '\n';
  for (const auto& v : rows) {
    out << v.m << ',' << v.n << ',' << v.q << ',' << format_double(v.value) << ','
        << format_double(v.imag_residual) << ',' << format_double(v.weil_bound) << '\n';
  }
  return out.str();
}

std::string csv_table(const std::vector<MomentEstimate>& rows) {
  std::ostringstream out;
  out << kMomentHeader << '\n';
  for (const auto& m : rows) {
    out << format_double(m.epsilon) << ',' << format_double(m.r) << ','
        << format_double(m.interval.alpha) << ',' << format_double(m.interval.beta) << ','
        << to_string(m.method) << ',' << format_double(m.scaled_value) << ','
        << format_double(m.main_term) << ',' << format_double(m.deviation) << '\n';
  }
  return out.str();
}

std::string csv_table(const std::vector<ReflectionCount>& rows) {
  std::ostringstream out;
  out << kReflectionHeader << '\n';
  for (const auto& r : rows) {
    out << format_double(r.omega) << ',' << r.count << ',' << to_string(r.branch) << ','
        << to_string(r.arc) << ',' << r.pair.left.num << ',' << r.pair.left.den << ','
        << r.pair.right.num << ',' << r.pair.right.den << ',' << r.pair.order << '\n';
  }
  return out.str();
}

std::string csv_table(const std::vector<FareyFraction>& rows) {
  std::ostringstream out;
  out << kFractionHeader << '\n';
  for (const auto& f : rows) out << f.num << ',' << f.den << '\n';
  return out.str();
}

std::string csv_table(const std::vector<FareyPair>& rows) {
  std::ostringstream out;
  out << kPairHeader << '\n';
  for (const auto& p : rows) {
    out << p.left.num << ',' << p.left.den << ',' << p.right.num << ',' << p.right.den << ','
        << p.order << '\n';
  }
  return out.str();
}

std::string csv_table(const std::vector<EpsilonPM>& rows) {
  std::ostringstream out;
  out << kEpsilonPMHeader << '\n';
  for (const auto& e : rows) {
    out << e.q << ',' << e.a << ',' << format_double(e.eps_minus) << ','
        << format_double(e.eps_plus) << '\n';
  }
  return out.str();
}

std::string csv_table(const SweepReport& report) {
  std::ostringstream out;
  out << kSweepHeader << '\n';
  for (const auto& r : report.rows) {
    out << to_string(report.theorem) << ',' << format_double(r.epsilon) << ','
        << format_double(r.r) << ',' << format_double(r.interval.alpha) << ','
        << format_double(r.interval.beta) << ',' << format_double(r.scaled_value) << ','
        << format_double(r.main_term) << ',' << format_double(r.deviation) << ','
        << format_double(r.predicted_bound) << ',' << (r.row_pass ? "true" : "false") << '\n';
  }
  if (!report.squeeze.empty()) {
    out << '\n' << kSqueezeHeader << '\n';
    for (const auto& s : report.squeeze) {
      out << to_string(report.theorem) << ',' << format_double(s.epsilon) << ','
          << format_double(s.r) << ',' << s.j << ',' << format_double(s.interval.alpha) << ','
          << format_double(s.interval.beta) << ',' << s.q_plus << ',' << s.q_minus << ','
          << format_double(s.lower) << ',' << format_double(s.direct) << ','
          << format_double(s.upper) << ',' << (s.contained ? "true" : "false") << '\n';
    }
  }
  return out.str();
}

}  // namespace freepath
