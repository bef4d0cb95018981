#include "iwahori/serialize.hpp"

#include <fstream>

#include "iwahori/error.hpp"

namespace iwahori {

namespace {

template <typename T>
T get_field(const Json& j, const char* key) {
  if (!j.contains(key)) fail(ErrorCode::Parse, std::string("missing key '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::Parse, std::string("bad value for '") + key + "': " + e.what());
  }
}

}  // namespace

Json datum_spec_to_json(const DatumSpec& spec) {
  Json j;
  j["name"] = spec.name;
  j["lattice_rank"] = spec.lattice_rank;
  j["roots"] = spec.roots;
  j["coroots"] = spec.coroots;
  j["simple_indices"] = spec.simple_indices;
  return j;
}

Json datum_to_json(const FrobeniusTwist& twist) {
  Json j = datum_spec_to_json(twist.datum().spec());
  Json sigma;
  sigma["linear_part"] = matrix_to_json(twist.linear_part());
  if (twist.omega_part() == twist.group().identity())
    sigma["omega_part"] = nullptr;
  else
    sigma["omega_part"] = element_to_json(twist.group(), twist.omega_part());
  j["sigma"] = sigma;
  return j;
}

LoadedDatum datum_from_json(const Json& j) {
  if (!j.is_object()) fail(ErrorCode::Parse, "datum must be a JSON object");
  DatumSpec spec;
  spec.name = j.contains("name") ? get_field<std::string>(j, "name") : "";
  spec.lattice_rank = get_field<std::size_t>(j, "lattice_rank");
  spec.roots = get_field<std::vector<IntVector>>(j, "roots");
  spec.coroots = get_field<std::vector<IntVector>>(j, "coroots");
  spec.simple_indices = get_field<std::vector<std::size_t>>(j, "simple_indices");

  LoadedDatum out;
  out.datum = std::make_shared<const RootDatum>(std::move(spec));
  out.group = std::make_shared<const AffineWeylGroup>(out.datum);
  const std::size_t n = out.datum->rank();
  if (j.contains("sigma") && !j.at("sigma").is_null()) {
    const Json& s = j.at("sigma");
    IntMatrix lin = s.contains("linear_part") ? matrix_from_json(s.at("linear_part"), n, n)
                                              : IntMatrix::identity(n);
    std::optional<Element> omega;
    if (s.contains("omega_part") && !s.at("omega_part").is_null())
      omega = element_from_json(*out.group, s.at("omega_part"));
    out.twist = std::make_shared<const FrobeniusTwist>(out.group, lin, omega);
  } else {
    out.twist = std::make_shared<const FrobeniusTwist>(FrobeniusTwist::split(out.group));
  }
  return out;
}

LoadedDatum load_datum_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Parse, "cannot open datum file '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::Parse, "invalid JSON in '" + path + "': " + e.what());
  }
  return datum_from_json(j);
}

Json matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return rows;
}

IntMatrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols) {
  std::vector<IntVector> data;
  try {
    data = j.get<std::vector<IntVector>>();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::Parse, std::string("matrix must be an array of integer rows: ") + e.what());
  }
  require(data.size() == rows, ErrorCode::Parse, "matrix has the wrong number of rows");
  for (const auto& r : data) require(r.size() == cols, ErrorCode::Parse, "matrix has the wrong number of columns");
  return IntMatrix::from_rows(data, cols);
}

Json element_to_json(const AffineWeylGroup& group, const Element& w) {
  Json j;
  j["translation"] = w.translation;
  j["finite_part"] = matrix_to_json(group.datum().weyl().matrix(w.finite));
  return j;
}

Element element_from_json(const AffineWeylGroup& group, const Json& j) {
  if (!j.is_object()) fail(ErrorCode::Parse, "element must be a JSON object");
  const std::size_t n = group.rank();
  IntVector t = get_field<IntVector>(j, "translation");
  require(t.size() == n, ErrorCode::Parse, "translation has the wrong length");
  W0Index v = FiniteWeylGroup::identity();
  if (j.contains("finite_part") && !j.at("finite_part").is_null()) {
    auto found = group.datum().weyl().find(matrix_from_json(j.at("finite_part"), n, n));
    require(found.has_value(), ErrorCode::Parse, "finite_part is not an element of W0");
    v = *found;
  }
  return Element{t, v};
}

std::string word_string(const AffineWeylGroup& group, const Element& w) {
  ReducedWord rw = group.reduced_word(w);
  const std::size_t r = group.datum().num_simple();
  const bool several = group.datum().components().size() > 1;
  std::string s;
  for (auto k : rw.letters) {
    if (!s.empty()) s += ' ';
    if (k < r) {
      s += "s" + std::to_string(k + 1);
    } else {
      s += "s0";
      if (several) s += "_" + std::to_string(k - r + 1);
    }
  }
  if (!(rw.omega == group.identity())) {
    if (!s.empty()) s += ' ';
    s += "omega[";
    auto kappa = group.kappa_tilde(rw.omega);
    for (std::size_t i = 0; i < kappa.size(); ++i) s += (i ? "," : "") + std::to_string(kappa[i]);
    s += "]";
  }
  return s.empty() ? "1" : s;
}

Json rational_vector_to_json(const RationalVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(format_rational(x));
  return a;
}

Json bpoint_to_json(const BPoint& p) {
  Json j;
  j["newton"] = rational_vector_to_json(p.newton);
  j["kappa"] = p.kappa;
  return j;
}

Json strata_to_json(const StrataPoset& poset) {
  Json j;
  j["mu"] = poset.mu;
  Json nodes = Json::array();
  for (const auto& n : poset.nodes) {
    Json x;
    x["lambda"] = n.lambda;
    x["orbit_size"] = n.orbit_size;
    x["is_top"] = n.is_top;
    nodes.push_back(x);
  }
  j["nodes"] = nodes;
  Json covers = Json::array();
  for (const auto& [a, b] : poset.covers) covers.push_back({poset.nodes[a].lambda, poset.nodes[b].lambda});
  j["covers"] = covers;
  return j;
}

Json laurent_to_json(const LaurentPoly& p) {
  Json j = Json::object();
  for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = c;
  return j;
}

Json loop_matrix_to_json(const LoopMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.size(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.size(); ++c) row.push_back(laurent_to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

Json verify_report_to_json(const VerifyReport& r) {
  Json j;
  j["all_pass"] = r.all_pass;
  j["checked"] = r.checked;
  j["case"] = r.case_no;
  j["q"] = r.q;
  j["unramified"] = r.unramified;
  j["base_point_pass"] = r.base_point_pass;
  Json results = Json::array();
  for (const auto& [x, pass] : r.results) results.push_back({{"x", x}, {"pass", pass}});
  j["results"] = results;
  if (r.first_failure) {
    j["first_failure"] = {{"x", r.first_failure->first},
                          {"witness", loop_matrix_to_json(r.first_failure->second)}};
  }
  return j;
}

}  // namespace iwahori
