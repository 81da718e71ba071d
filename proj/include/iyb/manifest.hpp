// Line-oriented interchange format: [kind name] sections with key=value
// pairs, '#' comments, matrices as [[..],[..]], tables as '/'-separated
// rows of space-separated integers, permutations in 1-based cycle
// notation. Files start with format=1. RESULT lines are ignored on input
// so that command output re-parses as a manifest.
#pragma once

#include "iyb/structure.hpp"

#include <map>
#include <string>

namespace iyb {

struct Diagnostic {
    int line;
    std::string message;
};

struct Manifest {
    std::map<std::string, GroupPtr> groups;
    std::map<std::string, GModule> modules;
    std::map<std::string, Cocycle1> cocycles1;
    std::map<std::string, Cocycle2> cocycles2;
    std::map<std::string, ModuleExtension> extensions;
    std::map<std::string, IDatum> data;
    std::map<std::string, std::vector<Perm>> embeddings;
    std::map<std::string, std::string> embedding_group;  // embedding name -> group name
    std::map<std::string, SolutionMap> solutions;

    // lookup helpers for names registered by the parser
    std::string group_name(const GroupPtr& g) const;
};

// parse; on failure the diagnostics are filled and nullopt is returned
std::optional<Manifest> parse_manifest(const std::string& text, std::vector<Diagnostic>& diags);

// canonical serializers; group_names supplies names for referenced groups
std::string emit_group(const std::string& name, const FiniteGroup& g);
std::string emit_module(const std::string& name, const GModule& m, const std::string& group_name);
std::string emit_cocycle1(const std::string& name, const Cocycle1& c, const std::string& group_name,
                          const std::string& module_name);
std::string emit_cocycle2(const std::string& name, const Cocycle2& c, const std::string& group_name,
                          const std::string& module_name);
std::string emit_datum(const std::string& name, const std::string& group_name, const std::string& module_name,
                       const std::string& cocycle_name);
std::string emit_embedding(const std::string& name, const std::vector<Perm>& perms, const std::string& group_name);
std::string emit_solution(const std::string& name, const SolutionMap& r);

}  // namespace iyb
