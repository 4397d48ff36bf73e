/**
 * @file catfile.hpp
 * @brief JSON file formats: category tables, matrix morphisms and reports.
 *
 * Category files carry objects, morphisms, identities and the full
 * composition table by name. Serialization is canonical (fixed key order,
 * comp sorted by composer then composee), so parse/serialize round-trips are
 * byte-identical on canonically produced files.
 */

#pragma once

#include <string>

#include "cat2vect/vectc.hpp"

namespace cat2vect {

/// Parses a category document and validates it. Throws UsageError on
/// malformed JSON and the validation errors otherwise.
FinCategory parse_category_file(const std::string& text);

/// Canonical serialization (two-space indent, trailing newline).
std::string serialize_category(const FinCategory& c);

FinCategory load_category_file(const std::string& path);
void write_category_file(const std::string& path, const FinCategory& c);

/// Reads a one-object category as a group table; throws UsageError when the
/// category has several objects or a non-invertible morphism.
GroupTable group_from_category(const FinCategory& c);

/// Matrix morphism document: {"src": [...], "tgt": [...], "cells":
/// [[{"<morph>": "<coeff>"}...]]} with coefficients as residues or "num/den".
MatMorph parse_matmorph(const VectC& v, const std::string& text);
std::string serialize_matmorph(const VectC& v, const MatMorph& m);

/// Comma-separated object names to a sequence object.
SeqObject parse_sequence(const FinCategory& c, const std::string& text);

}  // namespace cat2vect
