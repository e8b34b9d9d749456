#include "hodgeheat/io.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "hodgeheat/numfmt.hpp"

namespace hodgeheat {

using nlohmann::json;

WeightPolicy parse_weight_policy(const std::string& s) {
  if (s == "unit") return WeightPolicy::Unit;
  if (s == "explicit") return WeightPolicy::Explicit;
  if (s == "normalized") return WeightPolicy::Normalized;
  throw std::invalid_argument("unknown weight_policy \"" + s + "\"");
}

const char* weight_policy_name(WeightPolicy policy) {
  switch (policy) {
    case WeightPolicy::Unit: return "unit";
    case WeightPolicy::Explicit: return "explicit";
    case WeightPolicy::Normalized: return "normalized";
  }
  return "unit";
}

namespace {

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                         const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* k : allowed) {
      if (it.key() == k) {
        known = true;
        break;
      }
    }
    if (!known)
      throw std::invalid_argument("unknown key \"" + it.key() + "\" in " + where);
  }
}

WeightedComplex from_json_doc(const json& doc, ClosureMode mode) {
  if (!doc.is_object())
    throw std::invalid_argument("complex file must be a JSON object");
  reject_unknown_keys(doc, {"name", "reduced", "weight_policy", "faces"},
                      "complex file");
  const std::string name = doc.value("name", std::string{});
  const bool reduced = doc.value("reduced", true);
  const WeightPolicy policy =
      parse_weight_policy(doc.value("weight_policy", std::string{"unit"}));
  if (!doc.contains("faces") || !doc["faces"].is_array())
    throw std::invalid_argument("complex file needs a \"faces\" array");

  std::vector<FaceSpec> specs;
  for (const json& entry : doc["faces"]) {
    if (!entry.is_object())
      throw std::invalid_argument("each face entry must be an object");
    reject_unknown_keys(entry, {"vertices", "weight"}, "face entry");
    if (!entry.contains("vertices") || !entry["vertices"].is_array())
      throw std::invalid_argument("face entry needs a \"vertices\" array");
    FaceSpec spec;
    for (const json& v : entry["vertices"]) {
      if (!v.is_number_integer())
        throw std::invalid_argument("vertices must be integers");
      spec.vertices.push_back(v.get<int>());
    }
    if (entry.contains("weight")) {
      if (!entry["weight"].is_number())
        throw std::invalid_argument("weight must be a number");
      const double w = entry["weight"].get<double>();
      if (!(w > 0.0)) {
        Face f = Face::from_unsorted(spec.vertices);
        throw std::invalid_argument("nonpositive weight for face " + f.label());
      }
      spec.weight = w;
    }
    specs.push_back(std::move(spec));
  }
  return build_complex(std::move(specs), policy, mode, reduced, name);
}

}  // namespace

WeightedComplex parse_complex_text(const std::string& text, ClosureMode mode) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  return from_json_doc(doc, mode);
}

WeightedComplex parse_complex_file(const std::string& path, ClosureMode mode) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open complex file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_complex_text(buf.str(), mode);
}

json complex_to_json(const WeightedComplex& K) {
  json faces = json::array();
  for (int i = K.reduced() ? -1 : 0; i <= K.dim(); ++i) {
    for (int k = 0; k < K.face_count(i); ++k) {
      json entry;
      entry["vertices"] = K.face(i, k).vertices();
      entry["weight"] = K.weight(i, k);
      faces.push_back(std::move(entry));
    }
  }
  json doc;
  doc["name"] = K.name();
  doc["reduced"] = K.reduced();
  doc["weight_policy"] = "explicit";
  doc["faces"] = std::move(faces);
  return doc;
}

json json_number(double x) {
  if (std::isinf(x)) return x > 0 ? json("inf") : json("-inf");
  if (std::isnan(x)) return json("nan");
  return json(x);
}

json to_json(const SpectralData& sd) {
  json j;
  j["dim"] = sd.dim;
  j["lambda"] = json_number(sd.lambda_min);
  j["method"] = sd.method;
  j["residual"] = json_number(sd.residual);
  return j;
}

namespace {
json faces_to_json(const std::vector<Face>& faces) {
  json arr = json::array();
  for (const Face& f : faces) arr.push_back(f.label());
  return arr;
}
}  // namespace

json to_json(const DggReport& rep) {
  json j;
  j["form"] = rep.form;
  j["dim"] = rep.dim;
  j["set_a"] = faces_to_json(rep.set_a);
  j["set_b"] = faces_to_json(rep.set_b);
  j["t"] = json_number(rep.t);
  j["kind"] = metric_kind_name(rep.kind);
  j["rho"] = json_number(rep.rho);
  j["s"] = json_number(rep.jump);
  j["lambda"] = json_number(rep.lambda);
  j["zeta"] = json_number(rep.zeta);
  j["lhs"] = json_number(rep.lhs);
  j["rhs"] = json_number(rep.rhs);
  j["margin"] = json_number(rep.margin);
  j["hypothesis_ok"] = rep.hypothesis_ok;
  j["pass"] = rep.pass();
  if (!rep.note.empty()) j["note"] = rep.note;
  return j;
}

json to_json(const GaussianReport& rep) {
  json j;
  j["form"] = "gaussian";
  j["dim"] = rep.dim;
  j["t"] = json_number(rep.t);
  j["h"] = json_number(rep.h);
  j["rho"] = json_number(rep.rho);
  j["lambda"] = json_number(rep.lambda);
  j["C"] = json_number(rep.constant);
  j["bound"] = json_number(rep.bound);
  j["lhs"] = json_number(rep.lhs);
  j["pass"] = rep.pass();
  return j;
}

void write_heat_csv(const WeightedComplex& K, int i,
                    const std::vector<HeatState>& states,
                    const std::vector<double>& energies, std::ostream& out) {
  out << "face";
  for (const HeatState& st : states) out << ",t=" << fmt17(st.time);
  out << '\n';
  for (int k = 0; k < K.face_count(i); ++k) {
    out << '"' << K.face(i, k).label() << '"';
    for (const HeatState& st : states) out << ',' << fmt17(st.values(k));
    out << '\n';
  }
  if (!energies.empty()) {
    out << "energy";
    for (double e : energies) out << ',' << fmt17(e);
    out << '\n';
  }
}

const char* const kDggCsvHeader =
    "form,dim,kind,t,rho,s,lambda,zeta,lhs,rhs,margin,pass,set_a,set_b";

namespace {
std::string joined_labels(const std::vector<Face>& faces) {
  std::string s;
  for (std::size_t k = 0; k < faces.size(); ++k) {
    if (k) s += ';';
    s += faces[k].label();
  }
  return s;
}
}  // namespace

void write_dgg_csv_row(const DggReport& rep, std::ostream& out) {
  out << rep.form << ',' << rep.dim << ',' << metric_kind_name(rep.kind) << ','
      << fmt17(rep.t) << ',' << fmt17(rep.rho) << ',' << fmt17(rep.jump) << ','
      << fmt17(rep.lambda) << ',' << fmt17(rep.zeta) << ',' << fmt17(rep.lhs)
      << ',' << fmt17(rep.rhs) << ',' << fmt17(rep.margin) << ','
      << (rep.pass() ? "1" : "0") << ",\"" << joined_labels(rep.set_a)
      << "\",\"" << joined_labels(rep.set_b) << "\"\n";
}

}  // namespace hodgeheat
