#pragma once

#include "restcheck/model.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace restcheck {

struct ModelFile {
    ResourceModel resources;
    std::optional<BehavioralModel> behavior;
};

/// Parses the textual model format:
///
///   model        = resourceBlock [behaviorBlock] ;
///   resourceBlock= "resources" IDENT "{" {resourceDecl} {assocDecl} "}" ;
///   resourceDecl = ["root"] ("resource" | "collection") IDENT ["extends" IDENT]
///                  ["{" {attrDecl} "}"] ;
///   attrDecl     = "attr" IDENT ":" ("string"|"boolean"|"integer"|"decimal") ;
///   assocDecl    = "association" IDENT ":" IDENT "->" IDENT "[" NAT ".." (NAT|"*") "]" ;
///   behaviorBlock= "behavior" IDENT "for" IDENT "{" {stateDecl} {transDecl} "}" ;
///   stateDecl    = "state" IDENT [placement] ["{" ["inv" ":" OCL_TEXT] "}"]
///                | "initial" IDENT [placement] | "final" IDENT [placement] ;
///   placement    = "in" IDENT ["region" NAT] ;
///   transDecl    = "transition" IDENT "->" IDENT "on" ("PUT"|"POST"|"DELETE") [IDENT]
///                  ["guard" STRING] ["post" STRING] ;
///
/// "#" starts a comment running to end of line. States that contain other
/// states become composite. Throws ParseError on the first syntax error and
/// ResolveError listing every unbound resource or state name.
ModelFile parseModelFile(std::string_view input, const std::string &fileName = "<input>");

/// Canonical pretty-print; parseModelFile(formatModel(x)) has the same
/// structure as x.
std::string formatModel(const ResourceModel &rm, const BehavioralModel *bm = nullptr);
std::string formatModel(const ModelFile &file);

} // namespace restcheck
