#pragma once

#include <json.hpp>
#include <stdexcept>
#include <string>
#include <vector>

#include "kronrep/constructions.hpp"

namespace kronrep {

using Json = nlohmann::ordered_json;

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// strict: "p" or "p/q" in lowest terms
Rational parse_entry(const Json& j, const std::string& where);
// lenient, for command-line literals
MatQ parse_subspace_literal(const std::string& text);

Json to_json(const Rational& q);
Json to_json(const MatQ& m);
Json to_json(const KroneckerRep& m);
Json to_json(const SubspaceMap& v);
Json to_json(const SplittingType& s);
Json to_json(const Verdict& v);
Json to_json(const CertificateReport& rep);
Json to_json(const ConstructionResult& c);
Json to_json(const MorphismPair& f);

KroneckerRep rep_from_json(const Json& j);
SubspaceMap subspace_from_json(const Json& j, const std::string& where = "subspace");
std::vector<SubspaceMap> planes_from_json(const Json& j);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace kronrep
