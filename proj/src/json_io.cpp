#include "pwq/json_io.hpp"

namespace pwq {

Json to_json(const PackedWord& w) { return Json(w.letters); }

PackedWord packed_word_from_json(const Json& j) {
    return PackedWord(j.get<std::vector<int>>());
}

Json to_json(const OrderedSetPartition& s) { return Json(s.blocks); }

OrderedSetPartition osp_from_json(const Json& j) {
    return OrderedSetPartition(j.get<std::vector<std::vector<int>>>());
}

Json to_json(const CodeSequence& c) {
    return Json{{"entries", c.entries},
                {"flavor", c.flavor == CodeFlavor::plain ? "plain" : "boosted"}};
}

CodeSequence code_from_json(const Json& j) {
    CodeSequence c;
    c.entries = j.at("entries").get<std::vector<int>>();
    std::string flavor = j.at("flavor").get<std::string>();
    if (flavor == "plain") c.flavor = CodeFlavor::plain;
    else if (flavor == "boosted") c.flavor = CodeFlavor::boosted;
    else throw std::invalid_argument("code_from_json: unknown flavor '" + flavor + "'");
    return c;
}

Json to_json(const Polynomial& p) {
    Json terms = Json::array();
    Polynomial lexed = p.with_order(MonomialOrder::lex);
    for (const auto& [e, c] : lexed.terms())
        terms.push_back(Json{{"coeff", to_string(c)}, {"expt", e}});
    return Json{{"arity", p.arity()}, {"terms", terms}};
}

Polynomial polynomial_from_json(const Json& j, MonomialOrder ord) {
    Polynomial p(j.at("arity").get<int>(), ord);
    for (const auto& t : j.at("terms"))
        p.add_term(t.at("expt").get<Exponents>(),
                   rational_from_string(t.at("coeff").get<std::string>()));
    return p;
}

Json to_json(const QPolynomial& p) { return Json(p.coeffs()); }

QPolynomial qpolynomial_from_json(const Json& j) {
    return QPolynomial(j.get<std::vector<long long>>());
}

Json to_json(const SchurSymmetricFunction& f) {
    Json terms = Json::array();
    for (const auto& [lam, c] : f.terms())
        terms.push_back(Json{{"lambda", lam.parts}, {"q", c.coeffs()}});
    return Json{{"n", f.n()}, {"terms", terms}};
}

SchurSymmetricFunction schur_from_json(const Json& j) {
    SchurSymmetricFunction f(j.at("n").get<int>());
    for (const auto& t : j.at("terms"))
        f.add_term(Partition(t.at("lambda").get<std::vector<int>>()),
                   qpolynomial_from_json(t.at("q")));
    return f;
}

std::string content_hash(const Json& j) {
    std::string s = j.dump();
    unsigned long long h = 1469598103934665603ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[17];
    snprintf(buf, sizeof(buf), "%016llx", h);
    return std::string(buf);
}

}  // namespace pwq
