#include "mseg/json_io.hpp"

#include <algorithm>
#include <string>

#include "mseg/errors.hpp"

namespace mseg {
namespace {

template <typename F>
auto guarded(std::string_view what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string(what) + ": " + e.what());
  }
}

std::vector<int> int_array(const nlohmann::json& j) {
  if (!j.is_array()) throw Error(ErrorKind::InvalidInput, "expected an array of integers");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw Error(ErrorKind::InvalidInput, "expected an integer");
    out.push_back(x.get<int>());
  }
  return out;
}

}  // namespace

Json to_json(const Multisegment& d) {
  Json segs = Json::array();
  for (const auto& s : d.segments()) segs.push_back({s.start(), s.end()});
  return Json{{"segments", std::move(segs)}};
}

std::vector<Segment> segments_from_json(const nlohmann::json& j) {
  return guarded("multisegment JSON", [&] {
    std::vector<Segment> out;
    for (const auto& item : j.at("segments")) {
      const auto pair = int_array(item);
      if (pair.size() != 2) throw Error(ErrorKind::InvalidInput, "segment must be [i, j]");
      out.emplace_back(pair[0], pair[1]);
    }
    return out;
  });
}

Multisegment multisegment_from_json(const nlohmann::json& j) {
  return Multisegment(segments_from_json(j));
}

Json to_json(const Weight& lambda) {
  return Json{{"lambda", lambda.components()}};
}

Weight weight_from_json(const nlohmann::json& j) {
  return guarded("weight JSON", [&] {
    return Weight(int_array(j.is_object() ? j.at("lambda") : j));
  });
}

Json to_json(const ColoredPartition& cp) {
  return Json{{"parts", cp.shape.parts()}, {"color", cp.color}};
}

ColoredPartition colored_partition_from_json(const nlohmann::json& j) {
  return guarded("colored partition JSON", [&] {
    return ColoredPartition{Partition(int_array(j.at("parts"))), j.at("color").get<int>()};
  });
}

Json to_json(const Multipartition& mp) {
  Json comps = Json::array();
  for (const auto& cp : mp.components()) {
    comps.push_back({{"color", cp.color}, {"parts", cp.shape.parts()}});
  }
  return Json{{"components", std::move(comps)}};
}

Multipartition multipartition_from_json(const nlohmann::json& j) {
  return guarded("multipartition JSON", [&] {
    std::vector<ColoredPartition> comps;
    for (const auto& item : j.at("components")) comps.push_back(colored_partition_from_json(item));
    Multipartition mp(std::move(comps));
    if (j.contains("lambda") && !(weight_from_json(j.at("lambda")) == mp.lambda())) {
      throw Error(ErrorKind::InvalidInput, "\"lambda\" disagrees with the component colors");
    }
    return mp;
  });
}

Json to_json(const Character& c) {
  Json terms = Json::array();
  for (const auto& [w, m] : c.terms) terms.push_back({{"word", w}, {"mult", m}});
  return Json{{"length", c.length}, {"terms", std::move(terms)}};
}

Json null_json() { return Json{{"null", true}}; }

bool is_null_json(const nlohmann::json& j) {
  return j.is_object() && j.contains("null") && j.at("null") == true;
}

nlohmann::json parse_json(std::string_view text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("JSON parse error: ") + e.what());
  }
}

}  // namespace mseg
