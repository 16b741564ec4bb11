#include "toric/fan_io.hpp"

#include <fstream>
#include <sstream>

#include "toric/errors.hpp"

namespace toric {

namespace {

using nlohmann::json;

Int parse_entry(const json& j, const std::string& where) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned())
      return Int(static_cast<unsigned long>(j.get<std::uint64_t>()));
    return Int(static_cast<long>(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    std::size_t pos = s.size() && (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (pos == s.size()) throw ParseError(where + ": empty integer literal");
    for (std::size_t i = pos; i < s.size(); ++i)
      if (!isdigit(static_cast<unsigned char>(s[i])))
        throw ParseError(where + ": malformed integer literal '" + s + "'");
    return Int(s);
  }
  throw ParseError(where + ": expected an integer or a quoted integer");
}

}  // namespace

ParsedFan parse_fan_text(const std::string& text, const std::string& origin) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(origin + ": " + e.what());
  }
  if (!j.is_object()) throw ParseError(origin + ": top level must be an object");

  ParsedFan out;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError(origin + ": name must be a string");
    out.name = j["name"].get<std::string>();
  }

  if (!j.contains("lattice_rank") || !j["lattice_rank"].is_number_integer() ||
      j["lattice_rank"].get<std::int64_t>() < 0)
    throw ParseError(origin + ": lattice_rank must be a nonnegative integer");
  const std::size_t n = j["lattice_rank"].get<std::size_t>();

  if (!j.contains("rays") || !j["rays"].is_array())
    throw ParseError(origin + ": rays must be a list of integer vectors");
  std::vector<IntVec> rays;
  for (std::size_t i = 0; i < j["rays"].size(); ++i) {
    const json& rj = j["rays"][i];
    std::ostringstream field;
    field << origin << ": rays[" << i << "]";
    if (!rj.is_array() || rj.size() != n)
      throw ParseError(field.str() + ": expected a vector of length " +
                       std::to_string(n));
    IntVec r(n);
    for (std::size_t c = 0; c < n; ++c)
      r[c] = parse_entry(rj[c], field.str() + "[" + std::to_string(c) + "]");
    if (is_zero(r)) throw ParseError(field.str() + ": ray is the zero vector");
    IntVec p = primitive(r);
    if (p != r) {
      std::ostringstream warn;
      warn << "ray " << i << " was not primitive; stored divided by its gcd";
      out.warnings.push_back(warn.str());
    }
    rays.push_back(std::move(p));
  }

  if (!j.contains("maximal_cones") || !j["maximal_cones"].is_array())
    throw ParseError(origin + ": maximal_cones must be a list of index lists");
  std::vector<std::vector<IntVec>> cones;
  for (std::size_t i = 0; i < j["maximal_cones"].size(); ++i) {
    const json& cj = j["maximal_cones"][i];
    std::ostringstream field;
    field << origin << ": maximal_cones[" << i << "]";
    if (!cj.is_array()) throw ParseError(field.str() + ": expected an index list");
    std::vector<IntVec> gens;
    for (const json& e : cj) {
      if (!e.is_number_integer() || e.get<std::int64_t>() < 0)
        throw ParseError(field.str() + ": ray indices are 0-based integers");
      std::size_t idx = e.get<std::size_t>();
      if (idx >= rays.size())
        throw ParseError(field.str() + ": ray index " + std::to_string(idx) +
                         " out of range");
      gens.push_back(rays[idx]);
    }
    cones.push_back(std::move(gens));
  }

  out.fan = Fan::from_maximal_cones(Lattice{n}, cones);
  return out;
}

ParsedFan parse_fan_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_fan_text(buf.str(), path);
}

nlohmann::ordered_json json_int(const Int& v) {
  if (v.fits_slong_p()) return nlohmann::ordered_json(v.get_si());
  return nlohmann::ordered_json(v.get_str());
}

nlohmann::ordered_json json_vector(const IntVec& v) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (const Int& x : v) a.push_back(json_int(x));
  return a;
}

nlohmann::ordered_json fan_to_json(const Fan& f, const std::string& name) {
  nlohmann::ordered_json out;
  if (!name.empty()) out["name"] = name;
  out["lattice_rank"] = f.lattice().rank;
  nlohmann::ordered_json rays = nlohmann::ordered_json::array();
  for (const IntVec& r : f.rays()) rays.push_back(json_vector(r));
  out["rays"] = rays;

  nlohmann::ordered_json cones = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < f.size(); ++i) {
    nlohmann::ordered_json c;
    c["dim"] = f.cone(i).dim();
    c["rays"] = f.cone_rays(i);
    cones.push_back(std::move(c));
  }
  out["cones"] = cones;

  nlohmann::ordered_json maximal = nlohmann::ordered_json::array();
  for (std::size_t m : f.maximal_cones()) maximal.push_back(f.cone_rays(m));
  out["maximal_cones"] = maximal;

  out["is_complete"] = f.is_complete();
  out["is_affine"] = f.is_affine();
  out["is_smooth"] = f.is_smooth();
  return out;
}

}  // namespace toric
