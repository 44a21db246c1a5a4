#include "eqsub/input.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "eqsub/error.hpp"

namespace eqsub::io {

using act::PointedActionData;
using exact::RatAngle;
using grp::FiniteGroup;

namespace {

bool take(std::string_view& s, std::string_view prefix) {
  if (s.substr(0, prefix.size()) != prefix) return false;
  s.remove_prefix(prefix.size());
  return true;
}

std::int64_t take_int(std::string_view& s, std::string_view whole) {
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p == s.data()) throw Error(Errc::Parse, "expected an integer in preset '" + std::string(whole) + "'");
  s.remove_prefix(static_cast<std::size_t>(p - s.data()));
  return v;
}

void finish(std::string_view s, std::string_view whole) {
  if (!s.empty()) throw Error(Errc::Parse, "trailing text in preset '" + std::string(whole) + "'");
}

int small_int(std::int64_t v, std::string_view whole) {
  if (v < 1 || v > 64) throw Error(Errc::Parse, "size out of range in preset '" + std::string(whole) + "'");
  return static_cast<int>(v);
}

RatAngle angle_value(const json& v) {
  if (v.is_string()) return RatAngle::parse(v.get<std::string>());
  if (v.is_number_integer()) return RatAngle(v.get<std::int64_t>(), 1);
  throw Error(Errc::Parse, "angle must be a string \"p/q\"");
}

std::vector<int> parse_key(const std::string& key, std::size_t arity) {
  std::vector<int> out;
  std::string_view s = key;
  if (!take(s, "(")) throw Error(Errc::Parse, "bad table key " + key);
  for (std::size_t i = 0; i < arity; ++i) {
    if (i && !take(s, ",")) throw Error(Errc::Parse, "bad table key " + key);
    while (take(s, " ")) {
    }
    out.push_back(static_cast<int>(take_int(s, key)));
  }
  if (!take(s, ")") || !s.empty()) throw Error(Errc::Parse, "bad table key " + key);
  return out;
}

void check_range(const std::vector<int>& idx, const std::vector<int>& bounds, const std::string& key) {
  for (std::size_t i = 0; i < idx.size(); ++i)
    if (idx[i] < 0 || idx[i] >= bounds[i]) throw Error(Errc::Parse, "table key " + key + " out of range");
}

std::string key3(int a, int b, int c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

}  // namespace

PointedActionData parse_preset(std::string_view text) {
  std::string_view s = text;
  if (take(s, "kp:")) {
    int n = small_int(take_int(s, text), text);
    if (!take(s, ":")) throw Error(Errc::Parse, "expected kp:n:p/q, got '" + std::string(text) + "'");
    RatAngle q = RatAngle::parse(s);
    return act::kp_action(n, q);
  }
  if (take(s, "twisted-double:")) {
    int n = small_int(take_int(s, text), text);
    if (!take(s, ":")) throw Error(Errc::Parse, "expected twisted-double:n:p, got '" + std::string(text) + "'");
    auto p = take_int(s, text);
    finish(s, text);
    return act::double_action(grp::cyclic_group(n), act::cyclic_cocycle(n, p));
  }
  if (take(s, "double:")) {
    FiniteGroup g = grp::parse_group_preset(s);
    return act::double_action(g, act::Cocycle3(g));
  }
  if (take(s, "trivial:")) {
    FiniteGroup g = grp::consume_group_preset(s);
    if (!take(s, ":")) throw Error(Errc::Parse, "expected trivial:<G>:<K>, got '" + std::string(text) + "'");
    FiniteGroup k = grp::parse_group_preset(s);
    return act::fixtures::triv(g, k);
  }
  if (take(s, "mu-character:")) {
    int n = small_int(take_int(s, text), text);
    finish(s, text);
    return act::fixtures::mu_character(n);
  }
  if (s == "beta-alternating") return act::fixtures::beta_alternating();
  if (s == "swap-pair") return act::fixtures::swap_pair();
  if (s == "sym-on-cyclic3") return act::fixtures::sym_on_cyclic3();
  throw Error(Errc::Parse, "unknown preset '" + std::string(text) + "'");
}

std::vector<std::pair<std::string, std::string>> preset_catalog() {
  return {
      {"kp:n:p/q", "C2 swapping the factors of Z/n x Z/n with the Kac-Paljutkin tables for q = p/q, n q = 0"},
      {"double:<group>", "G acting on itself by conjugation, untwisted; e.g. double:sym:3"},
      {"twisted-double:n:p", "Z/n acting on itself, tables from the 3-cocycle class p"},
      {"trivial:<G>:<K>", "G acting trivially on K, all tables zero; e.g. trivial:cyclic:2:cyclic:2"},
      {"mu-character:n", "C2 acting trivially on Z/n with mu(s,s;k) = k/n"},
      {"beta-alternating", "C2 acting trivially on Z/2 x Z/2 with beta(s;a,b) = a1 b2 / 2"},
      {"swap-pair", "Z/2 x Z/2 acting on Z/2 x Z/2, the first factor by the swap"},
      {"sym-on-cyclic3", "S3 acting trivially on Z/3"},
      {"groups", "cyclic:n, sym:n, product:<g>,<g>,..."},
  };
}

FiniteGroup group_from_json(const json& j) {
  try {
    if (j.is_string()) return grp::parse_group_preset(j.get<std::string>());
    if (j.is_array()) return grp::validate_group(j.get<std::vector<std::vector<int>>>());
    if (j.is_object() && j.contains("table")) {
      std::vector<std::string> labels;
      if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
      return grp::validate_group(j.at("table").get<std::vector<std::vector<int>>>(), labels);
    }
  } catch (const json::exception& e) {
    throw Error(Errc::Parse, std::string("group: ") + e.what());
  }
  throw Error(Errc::Parse, "a group is a preset string, a table, or {\"table\": ...}");
}

json group_json(const FiniteGroup& g) { return {{"table", g.table()}, {"labels", g.labels()}}; }

PointedActionData action_data_from_json(const json& doc) {
  if (!doc.is_object()) throw Error(Errc::Parse, "the input document must be a JSON object");
  try {
    PointedActionData d;
    if (doc.contains("preset")) {
      d = parse_preset(doc.at("preset").get<std::string>());
    } else {
      std::string mode = "trivial";
      const json* perms = nullptr;
      if (doc.contains("action")) {
        const auto& a = doc.at("action");
        if (a.is_string())
          mode = a.get<std::string>();
        else
          perms = &a;
      }
      grp::ActionByAutomorphisms act;
      if (mode == "swap" && !perms) {
        if (!doc.contains("A")) throw Error(Errc::Parse, "action \"swap\" needs the factor group \"A\"");
        act = grp::swap_action(group_from_json(doc.at("A")));
      } else if (mode == "conjugation" && !perms) {
        act = grp::conjugation_action(group_from_json(doc.at("G")));
      } else {
        if (!doc.contains("G") || !doc.contains("K")) throw Error(Errc::Parse, "keys \"G\" and \"K\" are required");
        FiniteGroup G = group_from_json(doc.at("G"));
        FiniteGroup K = group_from_json(doc.at("K"));
        if (perms)
          act = grp::ActionByAutomorphisms(G, K, perms->get<std::vector<std::vector<int>>>());
        else if (mode == "trivial")
          act = grp::trivial_action(G, K);
        else
          throw Error(Errc::Parse, "unknown action \"" + mode + "\"");
      }
      d = PointedActionData(act);
    }

    const int nG = d.G().order(), nK = d.K().order();
    act::Cocycle3 omega = d.omega();
    if (doc.contains("omega"))
      for (const auto& [key, val] : doc.at("omega").items()) {
        auto i = parse_key(key, 3);
        check_range(i, {nK, nK, nK}, key);
        omega.set(i[0], i[1], i[2], angle_value(val));
      }
    if (doc.contains("omega") || omega != d.omega()) {
      PointedActionData e(d.action(), omega);
      for (int g = 0; g < nG; ++g)
        for (int k = 0; k < nK; ++k)
          for (int l = 0; l < nK; ++l) e.set_beta(g, k, l, d.beta(g, k, l));
      for (int g = 0; g < nG; ++g)
        for (int h = 0; h < nG; ++h)
          for (int k = 0; k < nK; ++k) e.set_mu(g, h, k, d.mu(g, h, k));
      d = e;
    }
    if (doc.contains("beta"))
      for (const auto& [key, val] : doc.at("beta").items()) {
        auto i = parse_key(key, 3);
        check_range(i, {nG, nK, nK}, key);
        d.set_beta(i[0], i[1], i[2], angle_value(val));
      }
    if (doc.contains("mu"))
      for (const auto& [key, val] : doc.at("mu").items()) {
        auto i = parse_key(key, 3);
        check_range(i, {nG, nG, nK}, key);
        d.set_mu(i[0], i[1], i[2], angle_value(val));
      }
    return d;
  } catch (const json::exception& e) {
    throw Error(Errc::Parse, e.what());
  }
}

json action_data_json(const PointedActionData& d) {
  json j;
  j["G"] = group_json(d.G());
  j["K"] = group_json(d.K());
  j["action"] = d.action().perms();
  const int nG = d.G().order(), nK = d.K().order();
  json omega = json::object(), beta = json::object(), mu = json::object();
  for (int a = 0; a < nK; ++a)
    for (int b = 0; b < nK; ++b)
      for (int c = 0; c < nK; ++c)
        if (auto v = d.w(a, b, c); !v.is_zero()) omega[key3(a, b, c)] = v.str();
  for (int g = 0; g < nG; ++g)
    for (int k = 0; k < nK; ++k)
      for (int l = 0; l < nK; ++l)
        if (auto v = d.beta(g, k, l); !v.is_zero()) beta[key3(g, k, l)] = v.str();
  for (int g = 0; g < nG; ++g)
    for (int h = 0; h < nG; ++h)
      for (int k = 0; k < nK; ++k)
        if (auto v = d.mu(g, h, k); !v.is_zero()) mu[key3(g, h, k)] = v.str();
  j["omega"] = omega;
  j["beta"] = beta;
  j["mu"] = mu;
  return j;
}

PointedActionData load_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Parse, "cannot open " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw Error(Errc::Parse, path + ": " + e.what());
  }
  return action_data_from_json(doc);
}

}  // namespace eqsub::io
