#include <nlohmann/json.hpp>

#include "ssg/verdict.hpp"

namespace ssg {
namespace {

nlohmann::ordered_json to_json_number(const BigInt& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

}  // namespace

std::string to_json(const NucleusAutomaton& a, const SimplicityVerdict& v) {
  using nlohmann::ordered_json;
  ordered_json out;
  out["hausdorff"] = v.hausdorff;
  out["complex_simple"] = v.complex_simple;
  out["cstar_simple"] = v.cstar_simple;
  if (v.nonsimple.all) {
    out["nonsimple_characteristics"] = "all";
  } else {
    out["nonsimple_characteristics"] = v.nonsimple.primes;
  }

  ordered_json subgroups = ordered_json::array();
  for (const auto& h : v.maximal_subgroups) {
    ordered_json names = ordered_json::array();
    for (StateId g : h.elements) names.push_back(a.name(g));
    ordered_json entry;
    entry["elements"] = std::move(names);
    entry["witness_word"] = a.format_word(h.word);
    subgroups.push_back(std::move(entry));
  }
  out["maximal_subgroups"] = std::move(subgroups);

  ordered_json witnesses = ordered_json::array();
  for (const auto& w : v.witnesses) {
    const GroupTable& group = v.maximal_subgroups[w.subgroup_index].group;
    ordered_json coeffs = ordered_json::object();
    for (std::size_t i = 0; i < group.order(); ++i)
      if (sgn(w.element.coefficients[i]) != 0)
        coeffs[a.name(group.elements[i])] = to_json_number(w.element.coefficients[i]);
    ordered_json entry;
    entry["subgroup_index"] = w.subgroup_index;
    entry["characteristic"] = w.characteristic;
    entry["coefficients"] = std::move(coeffs);
    witnesses.push_back(std::move(entry));
  }
  out["witnesses"] = std::move(witnesses);
  return out.dump(2) + "\n";
}

}  // namespace ssg
