#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "iwahori/admissible.hpp"
#include "iwahori/datum_constructors.hpp"
#include "iwahori/error.hpp"
#include "iwahori/loop_check.hpp"
#include "iwahori/selftest.hpp"
#include "iwahori/serialize.hpp"
#include "iwahori/sigma_conjugacy.hpp"

namespace iwahori::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DatumSource {
  std::string file;
  std::string kind;
  int res = 1;
  bool unitary = false;
  bool inner = false;
};

void add_datum_options(CLI::App* sub, DatumSource& src) {
  auto* file = sub->add_option("--datum", src.file, "Datum JSON file");
  auto* kind = sub->add_option("--kind", src.kind, "Standard datum kind (gl3, sp4, ...)");
  file->excludes(kind);
  sub->add_option("--res", src.res, "Restriction of scalars degree")->check(CLI::PositiveNumber);
  sub->add_flag("--unitary", src.unitary, "Unitary twist (with --kind gl<n>)");
  sub->add_flag("--inner", src.inner, "Inner twist by the length-zero class of e_1 (with --kind)");
}

std::shared_ptr<const FrobeniusTwist> load_twist(const DatumSource& src) {
  std::shared_ptr<const FrobeniusTwist> twist;
  if (!src.file.empty()) {
    if (src.unitary || src.inner) throw UsageError("--unitary and --inner require --kind");
    twist = load_datum_file(src.file).twist;
  } else if (!src.kind.empty()) {
    if (src.unitary && src.inner) throw UsageError("--unitary and --inner are exclusive");
    auto group = make_group(standard_datum(src.kind));
    if (src.unitary)
      twist = unitary_twist(group);
    else if (src.inner)
      twist = inner_twist(group);
    else
      twist = std::make_shared<const FrobeniusTwist>(FrobeniusTwist::split(group));
  } else {
    throw UsageError("one of --datum or --kind is required");
  }
  if (src.res > 1) twist = restriction_of_scalars(*twist, src.res);
  return twist;
}

IntVector parse_vector(const std::string& text, std::size_t rank, const std::string& flag) {
  IntVector v;
  if (!text.empty()) {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      std::size_t used = 0;
      std::int64_t x = 0;
      try {
        x = std::stoll(item, &used);
      } catch (const std::exception&) {
        throw UsageError(flag + ": '" + item + "' is not an integer");
      }
      if (item.find_first_not_of(" \t", used) != std::string::npos)
        throw UsageError(flag + ": '" + item + "' is not an integer");
      v.push_back(x);
    }
  }
  if (v.size() != rank)
    throw UsageError(flag + " needs " + std::to_string(rank) + " comma-separated integers");
  return v;
}

// Letters as printed in reduced words: 1..r finite, 0 (or 0_c) affine.
std::vector<std::size_t> parse_parahoric(const std::string& text, const AffineWeylGroup& G) {
  std::vector<std::size_t> J;
  const std::size_t r = G.datum().num_simple();
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
               item.end());
    if (!item.empty() && item.front() == 's') item.erase(0, 1);
    if (item.empty()) continue;
    std::size_t pos = 0;
    try {
      if (item.rfind("0_", 0) == 0) {
        std::size_t c = std::stoul(item.substr(2));
        if (c == 0) throw UsageError("");
        pos = r + c - 1;
      } else {
        std::size_t k = std::stoul(item);
        pos = k == 0 ? r : k - 1;
      }
    } catch (const std::exception&) {
      throw UsageError("--parahoric: bad letter '" + item + "'");
    }
    if (pos >= G.num_simple_reflections()) throw UsageError("--parahoric: no letter '" + item + "'");
    J.push_back(pos);
  }
  std::sort(J.begin(), J.end());
  J.erase(std::unique(J.begin(), J.end()), J.end());
  return J;
}

Json element_record(const AffineWeylGroup& G, const Element& w) {
  Json j = element_to_json(G, w);
  j["word"] = word_string(G, w);
  j["length"] = G.length(w);
  return j;
}

Json vectors_to_json(const std::vector<IntVector>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(v);
  return a;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

void emit_error(std::ostream& err, const std::string& kind, const std::string& code, const std::string& message) {
  Json j;
  j["error"] = {{"kind", kind}, {"code", code}, {"message", message}};
  err << j.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Twisted affine Weyl group combinatorics and loop-group membership checks", "iwahori"};
  app.require_subcommand(1, 1);

  DatumSource src;
  std::string mu_text, from_text, parahoric, translation_text, finite_text, out_file;
  bool dot = false, has_parahoric = false, timings = false;
  std::int64_t max_length = -1;
  int case_no = 0;
  std::int64_t q = 0, max_q = 9;
  bool unramified = false;
  SelftestOptions st;

  auto* datum = app.add_subcommand("datum", "Write a datum JSON");
  datum->add_option("--kind", src.kind, "Standard datum kind")->required();
  datum->add_option("--res", src.res, "Restriction of scalars degree")->check(CLI::PositiveNumber);
  datum->add_flag("--unitary", src.unitary, "Unitary twist");
  datum->add_flag("--inner", src.inner, "Inner twist");
  datum->add_option("--out", out_file, "Write to a file instead of stdout");

  auto* adm = app.add_subcommand("adm", "Admissible set Adm(mu), or its W_J double cosets");
  add_datum_options(adm, src);
  adm->add_option("--mu", mu_text, "Cocharacter, e.g. 1,0")->required();
  adm->add_option("--parahoric", parahoric, "Letters of J, e.g. 1,2 or 0");

  auto* straight = app.add_subcommand("straight", "Straight translations in W0.mu");
  add_datum_options(straight, src);
  straight->add_option("--mu", mu_text, "Cocharacter")->required();
  straight->add_option("--max-length", max_length,
                       "Also list B-points of straight elements in the component of t_mu up to this length");

  auto* newton = app.add_subcommand("newton", "Newton point and Kottwitz invariant of an element");
  add_datum_options(newton, src);
  newton->add_option("--translation", translation_text, "Translation part (default 0)");
  newton->add_option("--finite", finite_text, "Finite part as simple letters, e.g. 1,2");

  auto* bg = app.add_subcommand("bg", "The set B(G, mu)");
  add_datum_options(bg, src);
  bg->add_option("--mu", mu_text, "Cocharacter")->required();

  auto* muord = app.add_subcommand("mu-ordinary", "The mu-ordinary class, if any");
  add_datum_options(muord, src);
  muord->add_option("--mu", mu_text, "Cocharacter")->required();

  auto* kr = app.add_subcommand("kr-poset", "Strata poset for the very special parahoric");
  add_datum_options(kr, src);
  kr->add_option("--mu", mu_text, "Dominant cocharacter")->required();
  kr->add_flag("--dot", dot, "Emit DOT instead of JSON");

  auto* chain = app.add_subcommand("chain", "Chain from lambda up to mu");
  add_datum_options(chain, src);
  chain->add_option("--mu", mu_text, "Dominant cocharacter")->required();
  chain->add_option("--from", from_text, "Starting dominant cocharacter")->required();

  auto* verify = app.add_subcommand("verify-loop", "Check a loop-group membership for all x in F_q^x");
  verify->add_option("--case", case_no, "Case 1, 2 or 3")->required()->check(CLI::Range(1, 3));
  verify->add_option("--q", q, "Residue field order (odd)")->required();
  verify->add_flag("--unramified", unramified, "Unramified quadratic extension");
  verify->add_option("--max-q", max_q, "Largest q accepted");

  auto* selftest = app.add_subcommand("selftest", "Run the invariant suite");
  selftest->add_option("--seed", st.seed, "Random seed");
  selftest->add_option("--jobs", st.jobs, "Worker threads")->check(CLI::PositiveNumber);
  selftest->add_option("--box", st.box, "Coordinate box radius")->check(CLI::Range(1, 4));
  selftest->add_flag("--timings", timings, "Include per-check seconds");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    emit_error(err, "usage", e.get_name(), e.what());
    return kUsageError;
  }
  has_parahoric = adm->count("--parahoric") > 0;

  try {
    if (*datum) {
      auto twist = load_twist(src);
      Json j = datum_to_json(*twist);
      if (out_file.empty()) {
        emit(out, j);
      } else {
        std::ofstream f(out_file);
        if (!f) throw UsageError("cannot write '" + out_file + "'");
        emit(f, j);
      }
      return kOk;
    }
    if (*verify) {
      if (q > max_q) throw UsageError("q exceeds --max-q (" + std::to_string(max_q) + ")");
      LaurentRing ring = case_ring(case_no, q, unramified);
      auto report = verify_case(case_no, ring, translation_lift(ring, case_parahoric(case_no)));
      emit(out, verify_report_to_json(report));
      return report.all_pass ? kOk : kDomainError;
    }
    if (*selftest) {
      auto report = run_selftest(st);
      Json checks = Json::array();
      for (const auto& c : report.checks) {
        Json r{{"module", c.module}, {"name", c.name}, {"pass", c.pass}};
        if (!c.detail.empty()) r["detail"] = c.detail;
        if (timings) r["seconds"] = c.seconds;
        checks.push_back(r);
      }
      emit(out, Json{{"all_pass", report.all_pass()}, {"checks", checks}});
      return report.all_pass() ? kOk : kDomainError;
    }

    auto twist = load_twist(src);
    const auto& G = twist->group();
    const std::size_t n = twist->datum().rank();

    if (*newton) {
      IntVector t = translation_text.empty() ? IntVector(n, 0) : parse_vector(translation_text, n, "--translation");
      std::vector<std::size_t> word;
      const std::size_t r = twist->datum().num_simple();
      if (!finite_text.empty())
        for (auto k : parse_vector(finite_text, std::count(finite_text.begin(), finite_text.end(), ',') + 1,
                                   "--finite")) {
          if (k < 1 || static_cast<std::size_t>(k) > r) throw UsageError("--finite: letters run from 1 to " + std::to_string(r));
          word.push_back(static_cast<std::size_t>(k - 1));
        }
      Element w{t, twist->datum().weyl().from_word(word)};
      NewtonPoint np = newton_point(*twist, w);
      Json j;
      j["element"] = element_record(G, w);
      j["nu"] = rational_vector_to_json(np.nu);
      j["nu_bar"] = rational_vector_to_json(np.nu_bar);
      j["n"] = np.n;
      j["kappa"] = twist->kottwitz_Gamma(w);
      j["straight"] = is_sigma_straight(*twist, w);
      emit(out, j);
      return kOk;
    }

    const IntVector mu = parse_vector(mu_text, n, "--mu");

    if (*adm) {
      Json a = Json::array();
      if (has_parahoric) {
        for (const auto& w : admissible_set_J(*twist, mu, parse_parahoric(parahoric, G)))
          a.push_back(element_record(G, w));
      } else {
        for (const auto& w : admissible_set(*twist, mu).elements) a.push_back(element_record(G, w));
      }
      emit(out, a);
    } else if (*straight) {
      Json j;
      Json ts = Json::array();
      for (const auto& st_t : straight_translations_in_orbit(*twist, mu)) {
        Json r = bpoint_to_json(st_t.point);
        ts.push_back(Json{{"mu_prime", st_t.mu_prime}, {"newton", r["newton"]}, {"kappa", r["kappa"]}});
      }
      j["translations"] = ts;
      if (max_length >= 0) {
        Json pts = Json::array();
        for (const auto& p : straight_points_up_to_length(*twist, max_length, {G.omega_of_translation(mu)}))
          pts.push_back(bpoint_to_json(p));
        j["points"] = pts;
      }
      emit(out, j);
    } else if (*bg) {
      Json a = Json::array();
      for (const auto& p : b_of_g_mu(*twist, mu)) a.push_back(bpoint_to_json(p));
      emit(out, a);
    } else if (*muord) {
      Json a = Json::array();
      if (auto p = mu_ordinary(*twist, mu)) a.push_back(bpoint_to_json(*p));
      emit(out, a);
    } else if (*kr) {
      StrataPoset poset = kr_poset_very_special(*twist, mu);
      if (dot)
        out << poset.to_dot();
      else
        emit(out, strata_to_json(poset));
    } else if (*chain) {
      const IntVector from = parse_vector(from_text, n, "--from");
      emit(out, Json{{"chain", vectors_to_json(curve_chain(*twist, from, mu))}});
    }
    return kOk;
  } catch (const UsageError& e) {
    emit_error(err, "usage", "Usage", e.what());
    return kUsageError;
  } catch (const Error& e) {
    const bool usage = e.code() == ErrorCode::Parse;
    emit_error(err, usage ? "usage" : "domain", std::string(to_string(e.code())), e.what());
    return usage ? kUsageError : kDomainError;
  }
}

}  // namespace iwahori::cli
