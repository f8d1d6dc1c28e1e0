#pragma once

#include <json.hpp>

#include "pwq/codes.hpp"
#include "pwq/polyring.hpp"
#include "pwq/symfunc.hpp"

namespace pwq {

using Json = nlohmann::json;

// Wire formats. Sequences and set elements are 1-based, matching the
// written conventions; polynomial terms serialize in descending lex order
// regardless of the in-memory order.

Json to_json(const PackedWord& w);
PackedWord packed_word_from_json(const Json& j);

Json to_json(const OrderedSetPartition& s);
OrderedSetPartition osp_from_json(const Json& j);

Json to_json(const CodeSequence& c);
CodeSequence code_from_json(const Json& j);

Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j, MonomialOrder ord = MonomialOrder::lex);

Json to_json(const QPolynomial& p);
QPolynomial qpolynomial_from_json(const Json& j);

Json to_json(const SchurSymmetricFunction& f);
SchurSymmetricFunction schur_from_json(const Json& j);

// FNV-1a over a canonical serialization; guards cache files.
std::string content_hash(const Json& j);

}  // namespace pwq
