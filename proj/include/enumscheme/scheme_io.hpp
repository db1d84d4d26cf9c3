#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "enumscheme/scheme.hpp"

namespace enumscheme {

/// Stable JSON form: nodes in length-lex order, expand nodes carry their
/// child permutations, reduce nodes their position and gap basis.
inline nlohmann::ordered_json scheme_to_json(const Scheme& s) {
  nlohmann::ordered_json out;
  out["basis"] = nlohmann::ordered_json::array();
  for (const auto& p : s.basis().patterns()) out["basis"].push_back(p.values());
  out["nodes"] = nlohmann::ordered_json::array();
  for (const auto& [perm, node] : s.nodes()) {
    nlohmann::ordered_json jn;
    jn["perm"] = perm.values();
    if (node.kind == NodeKind::Expand) {
      jn["kind"] = "expand";
      jn["children"] = nlohmann::ordered_json::array();
      for (const auto& [j, child] : node.avoiding_children)
        jn["children"].push_back(child.values());
    } else {
      jn["kind"] = "reduce";
      jn["r"] = node.r;
      jn["gap_basis"] = nlohmann::ordered_json::array();
      for (const auto& b : node.gaps.excluded_basis())
        jn["gap_basis"].push_back(b.components());
    }
    out["nodes"].push_back(std::move(jn));
  }
  return out;
}

inline std::string scheme_to_json_text(const Scheme& s) {
  return scheme_to_json(s).dump(2) + "\n";
}

inline Scheme scheme_from_json(const nlohmann::json& in) {
  if (!in.is_object() || !in.contains("basis") || !in.contains("nodes"))
    throw std::invalid_argument("scheme json: expected object with basis and nodes");
  std::vector<Permutation> patterns;
  for (const auto& jp : in.at("basis"))
    patterns.push_back(Permutation(jp.get<std::vector<int>>()));
  Basis basis(std::move(patterns));

  std::map<Permutation, SchemeNode> nodes;
  for (const auto& jn : in.at("nodes")) {
    SchemeNode node;
    node.perm = Permutation(jn.at("perm").get<std::vector<int>>());
    const std::string kind = jn.at("kind").get<std::string>();
    if (kind == "expand") {
      node.kind = NodeKind::Expand;
      for (const auto& jc : jn.at("children")) {
        Permutation child(jc.get<std::vector<int>>());
        if (child.size() != node.perm.size() + 1)
          throw std::invalid_argument("scheme json: child of wrong length under " +
                                      node.perm.str());
        int j = 0;
        for (int i = 1; i <= child.size(); ++i)
          if (child.at(i) == child.size()) j = i;
        node.avoiding_children.emplace_back(j, std::move(child));
      }
    } else if (kind == "reduce") {
      node.kind = NodeKind::Reduce;
      node.r = jn.at("r").get<int>();
      std::vector<GapVector> excl;
      for (const auto& jb : jn.at("gap_basis"))
        excl.push_back(GapVector(jb.get<std::vector<int>>()));
      node.gaps = GapIdeal(node.perm.size() + 1, std::move(excl));
    } else {
      throw std::invalid_argument("scheme json: unknown node kind " + kind);
    }
    if (!nodes.emplace(node.perm, std::move(node)).second)
      throw std::invalid_argument("scheme json: duplicate node");
  }
  return Scheme(std::move(basis), std::move(nodes));
}

/// Figure-style DOT: solid arrows to expansion children, dashed arrows
/// labeled d_r to reduction targets, gap bases printed beneath reduce nodes.
inline std::string scheme_to_dot(const Scheme& s) {
  std::string out = "digraph scheme {\n";
  for (const auto& [perm, node] : s.nodes()) {
    out += "  \"" + perm.str() + "\"";
    if (node.kind == NodeKind::Reduce && !node.gaps.excluded_basis().empty()) {
      std::string basis_line;
      for (const auto& b : node.gaps.excluded_basis()) basis_line += b.str();
      out += " [label=\"" + perm.str() + "\\n" + basis_line + "\"]";
    }
    out += ";\n";
  }
  for (const auto& [perm, node] : s.nodes()) {
    if (node.kind == NodeKind::Expand) {
      for (const auto& [j, child] : node.avoiding_children)
        out += "  \"" + perm.str() + "\" -> \"" + child.str() + "\";\n";
    } else {
      out += "  \"" + perm.str() + "\" -> \"" + delete_at(perm, node.r).str() +
             "\" [style=dashed, label=\"d_" + std::to_string(node.r) + "\"];\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace enumscheme
