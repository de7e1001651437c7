#include "hs/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace hs {

namespace {

void only_keys(const Json& j, std::initializer_list<const char*> allowed, const char* what) {
    if (!j.is_object())
        throw ParseError(std::string(what) + " must be a JSON object");
    std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto& [k, v] : j.items())
        if (!ok.count(k))
            throw ParseError(std::string(what) + ": unknown field '" + k + "'");
}

const Json& field(const Json& j, const char* key, const char* what) {
    auto it = j.find(key);
    if (it == j.end())
        throw ParseError(std::string(what) + ": missing field '" + key + "'");
    return *it;
}

std::string str(const Json& j, const char* what) {
    if (!j.is_string())
        throw ParseError(std::string(what) + " must be a string");
    return j.get<std::string>();
}

int integer(const Json& j, const char* what) {
    if (!j.is_number_integer())
        throw ParseError(std::string(what) + " must be an integer");
    return j.get<int>();
}

MultiIndex index_from_json(const Json& j, const char* what) {
    if (!j.is_array())
        throw ParseError(std::string(what) + " must be an array of integers");
    std::vector<int> v;
    for (const auto& x : j) {
        int e = integer(x, what);
        if (e < 0)
            throw ParseError(std::string(what) + " has a negative entry");
        v.push_back(e);
    }
    return MultiIndex(v);
}

Json index_to_json(const MultiIndex& a) { return Json(a.entries()); }

std::vector<std::string> split_vars(const std::string& inner) {
    std::vector<std::string> vars;
    std::string cur;
    for (char c : inner) {
        if (c == ',') {
            vars.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty())
        vars.push_back(cur);
    for (const auto& v : vars)
        if (v.empty())
            throw ParseError("empty variable name in ring shorthand");
    return vars;
}

// tm, nbeta or explicit, whichever reproduces the set.
Json canonical_shape(const CoIdeal& c) {
    int p = c.arity();
    int m = c.height();
    if (CoIdeal::tm(p, m) == c)
        return Json{{"kind", "tm"}, {"p", p}, {"m", m}};
    auto max = c.maximal_elements();
    if (max.size() == 1 && CoIdeal::nbeta(max[0]) == c)
        return Json{{"kind", "nbeta"}, {"beta", index_to_json(max[0])}};
    Json els = Json::array();
    for (const auto& a : c.elements())
        els.push_back(index_to_json(a));
    return Json{{"kind", "explicit"}, {"elements", els}};
}

} // namespace

Json read_json_arg(const std::string& arg) {
    std::string text = arg;
    std::size_t first = arg.find_first_not_of(" \t\n");
    if (first == std::string::npos)
        throw ParseError("empty JSON argument");
    char c = arg[first];
    if (c != '{' && c != '[' && c != '"') {
        std::ifstream in(arg);
        if (!in)
            throw ParseError("cannot read '" + arg + "' as inline JSON or file");
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

Json base_to_json(const BaseRing& k) {
    switch (k.kind()) {
    case BaseRing::Kind::Integers: return Json{{"kind", "Z"}};
    case BaseRing::Kind::Rationals: return Json{{"kind", "Q"}};
    case BaseRing::Kind::IntegersMod:
        if (k.is_field())
            return Json{{"kind", "Fp"}, {"p", k.modulus().get_si()}};
        return Json{{"kind", "Zn"}, {"n", k.modulus().get_si()}};
    }
    throw ParseError("unknown base ring");
}

BaseRing base_from_json(const Json& j) {
    if (j.is_string())
        return base_from_name(j.get<std::string>());
    std::string kind = str(field(j, "kind", "base ring"), "base ring kind");
    if (kind == "Z" || kind == "Q") {
        only_keys(j, {"kind"}, "base ring");
        return kind == "Z" ? BaseRing::integers() : BaseRing::rationals();
    }
    if (kind == "Fp") {
        only_keys(j, {"kind", "p"}, "base ring");
        int p = integer(field(j, "p", "base ring"), "p");
        BaseRing k = p >= 2 ? BaseRing::integers_mod(p) : BaseRing::integers();
        if (p < 2 || !k.is_field())
            throw ParseError("Fp needs a prime p, got " + std::to_string(p));
        return k;
    }
    if (kind == "Zn") {
        only_keys(j, {"kind", "n"}, "base ring");
        int n = integer(field(j, "n", "base ring"), "n");
        if (n < 2)
            throw ParseError("Zn needs n >= 2");
        return BaseRing::integers_mod(n);
    }
    throw ParseError("unknown base ring kind '" + kind + "'");
}

BaseRing base_from_name(const std::string& name) {
    if (name == "Q")
        return BaseRing::rationals();
    if (name == "Z")
        return BaseRing::integers();
    auto number = [&](std::size_t from) {
        std::string digits = name.substr(from);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("unknown base ring '" + name + "'");
        return std::stol(digits);
    };
    if (name.rfind("Z/", 0) == 0) {
        long n = number(2);
        if (n < 2)
            throw ParseError("Z/n needs n >= 2");
        return BaseRing::integers_mod(n);
    }
    if (name.rfind("F", 0) == 0) {
        long p = number(1);
        if (p < 2 || !BaseRing::integers_mod(p).is_field())
            throw ParseError("F" + std::to_string(p) + " is not a prime field");
        return BaseRing::integers_mod(p);
    }
    throw ParseError("unknown base ring '" + name + "'");
}

Json ring_to_json(const AlgebraPtr& A) {
    Json rels = Json::array();
    for (const auto& r : A->relations())
        rels.push_back(poly::format(r, A->vars()));
    return Json{{"base", base_to_json(A->base())}, {"vars", A->vars()}, {"relations", rels}};
}

AlgebraPtr ring_from_json(const Json& j, int degree_cap) {
    only_keys(j, {"base", "vars", "relations"}, "ring");
    BaseRing k = base_from_json(field(j, "base", "ring"));
    std::vector<std::string> vars, rels;
    if (j.contains("vars"))
        for (const auto& v : j["vars"])
            vars.push_back(str(v, "variable name"));
    if (j.contains("relations"))
        for (const auto& r : j["relations"])
            rels.push_back(str(r, "relation"));
    return Algebra::make(k, vars, rels, degree_cap);
}

AlgebraPtr ring_from_arg(const std::string& arg, int degree_cap) {
    std::size_t first = arg.find_first_not_of(" \t");
    if (first != std::string::npos && (arg[first] == '{' || arg[first] == '"'))
        return ring_from_json(read_json_arg(arg), degree_cap);
    std::size_t br = arg.find('[');
    std::string base = arg.substr(0, br);
    try {
        BaseRing k = base_from_name(base);
        std::vector<std::string> vars;
        if (br != std::string::npos) {
            if (arg.back() != ']')
                throw ParseError("ring shorthand must end with ']'");
            vars = split_vars(arg.substr(br + 1, arg.size() - br - 2));
        }
        return Algebra::make(k, vars, std::vector<std::string>{}, degree_cap);
    } catch (const ParseError&) {
        std::ifstream probe(arg);
        if (!probe)
            throw;
    }
    return ring_from_json(read_json_arg(arg), degree_cap);
}

Json shape_to_json(const Shape& sh) { return canonical_shape(*sh); }

Shape shape_from_json(const Json& j) {
    std::string kind = str(field(j, "kind", "shape"), "shape kind");
    if (kind == "tm") {
        only_keys(j, {"kind", "p", "m"}, "shape");
        int p = integer(field(j, "p", "shape"), "p"), m = integer(field(j, "m", "shape"), "m");
        if (p < 0 || m < 0)
            throw ParseError("tm shape needs p, m >= 0");
        return shape_tm(p, m);
    }
    if (kind == "nbeta") {
        only_keys(j, {"kind", "beta"}, "shape");
        return shape_nbeta(index_from_json(field(j, "beta", "shape"), "beta"));
    }
    if (kind == "explicit") {
        only_keys(j, {"kind", "elements"}, "shape");
        const Json& els = field(j, "elements", "shape");
        if (!els.is_array() || els.empty())
            throw ParseError("explicit shape needs a non-empty element list");
        std::vector<MultiIndex> v;
        for (const auto& e : els)
            v.push_back(index_from_json(e, "shape element"));
        try {
            return make_shape(CoIdeal::from_elements(int(v[0].size()), v));
        } catch (const DomainError& e) {
            throw ParseError(e.what());
        }
    }
    if (kind == "product") {
        only_keys(j, {"kind", "factors"}, "shape");
        const Json& fs = field(j, "factors", "shape");
        if (!fs.is_array() || fs.empty())
            throw ParseError("product shape needs factors");
        CoIdeal acc = *shape_from_json(fs[0]);
        for (std::size_t i = 1; i < fs.size(); ++i)
            acc = CoIdeal::product(acc, *shape_from_json(fs[i]));
        return make_shape(acc);
    }
    throw ParseError("unknown shape kind '" + kind + "'");
}

Json series_to_json(const ElemSeries& r) {
    Json coeffs = Json::array();
    for (const auto& a : r.shape()->elements()) {
        const Elem& c = r[a];
        if (!c.is_zero())
            coeffs.push_back(Json{{"alpha", index_to_json(a)}, {"value", c.to_string()}});
    }
    return Json{{"shape", shape_to_json(r.shape())}, {"coeffs", coeffs}};
}

ElemSeries series_from_json(const AlgebraPtr& A, const Json& j) {
    only_keys(j, {"shape", "coeffs"}, "series");
    Shape sh = shape_from_json(field(j, "shape", "series"));
    const Json& cs = field(j, "coeffs", "series");
    if (cs.is_string())
        return parse_series(A, sh, cs.get<std::string>(), "s");
    if (!cs.is_array())
        throw ParseError("series coeffs must be an array or a string");
    ElemSeries r = zero_series(A, sh);
    for (const auto& c : cs) {
        only_keys(c, {"alpha", "value"}, "series coefficient");
        MultiIndex a = index_from_json(field(c, "alpha", "series coefficient"), "alpha");
        if (int(a.size()) != sh->arity() || !sh->contains(a))
            throw ParseError("coefficient index " + a.to_string() + " lies outside the shape");
        r.add_to(a, Elem::parse(A, str(field(c, "value", "series coefficient"), "value")));
    }
    return r;
}

Json hs_to_json(const HSDerivation& d) {
    Json phi = Json::object();
    auto ims = d.image_strings();
    for (std::size_t j = 0; j < ims.size(); ++j)
        phi[d.algebra()->vars()[j]] = ims[j];
    return Json{{"algebra", ring_to_json(d.algebra())}, {"shape", shape_to_json(d.shape())}, {"phi", phi}};
}

HSDerivation hs_from_json(const Json& j, const AlgebraPtr& fallback, int degree_cap) {
    only_keys(j, {"algebra", "shape", "phi"}, "HS-derivation");
    AlgebraPtr A = j.contains("algebra") ? (j["algebra"].is_string() ? ring_from_arg(j["algebra"].get<std::string>(), degree_cap)
                                                                     : ring_from_json(j["algebra"], degree_cap))
                                         : fallback;
    if (!A)
        throw ParseError("HS-derivation needs an algebra");
    Shape sh = shape_from_json(field(j, "shape", "HS-derivation"));
    const Json& phi = field(j, "phi", "HS-derivation");
    if (!phi.is_object())
        throw ParseError("phi must map variables to images");
    std::vector<std::string> ims;
    for (const auto& v : A->vars())
        ims.push_back(phi.contains(v) ? str(phi[v], "image") : v);
    for (const auto& [k, v] : phi.items())
        if (!A->var_index(k))
            throw ParseError("phi mentions unknown variable '" + k + "'");
    return HSDerivation::parse(A, sh, ims);
}

Json subst_to_json(const SubstMap& phi) {
    return Json{{"source", {{"p", phi.source()->arity()}, {"shape", shape_to_json(phi.source())}}},
                {"target", {{"p", phi.target()->arity()}, {"shape", shape_to_json(phi.target())}}},
                {"images", phi.image_strings()}};
}

SubstMap subst_from_json(const AlgebraPtr& A, const Json& j) {
    only_keys(j, {"source", "target", "images"}, "substitution map");
    auto side = [](const Json& s, const char* what) {
        only_keys(s, {"p", "shape"}, what);
        Shape sh = shape_from_json(field(s, "shape", what));
        if (s.contains("p") && integer(s["p"], "p") != sh->arity())
            throw ParseError(std::string(what) + ": p disagrees with the shape arity");
        return sh;
    };
    Shape src = side(field(j, "source", "substitution map"), "source");
    Shape tgt = side(field(j, "target", "substitution map"), "target");
    std::vector<std::string> ims;
    for (const auto& s : field(j, "images", "substitution map"))
        ims.push_back(str(s, "image"));
    if (int(ims.size()) != src->arity())
        throw ParseError("substitution map needs one image per source variable");
    return SubstMap::parse(A, src, tgt, ims);
}

Derivation derivation_from_json(const AlgebraPtr& A, const Json& j) {
    if (!j.is_object())
        throw ParseError("derivation must map variables to values");
    std::vector<Elem> ims(A->nvars(), Elem(A));
    for (const auto& [k, v] : j.items()) {
        auto i = A->var_index(k);
        if (!i)
            throw ParseError("derivation mentions unknown variable '" + k + "'");
        ims[*i] = Elem::parse(A, str(v, "derivation value"));
    }
    return Derivation::make(A, ims);
}

Json derivation_to_json(const Derivation& d) {
    Json out = Json::object();
    for (std::size_t j = 0; j < d.images().size(); ++j)
        out[d.algebra()->vars()[j]] = d.images()[j].to_string();
    return out;
}

Json integral_to_json(const IntegralResult& r) {
    Json out{{"status", to_string(r.status)}};
    if (r.integral)
        out["integral"] = hs_to_json(*r.integral);
    if (r.status != IntegralResult::Status::Integrable)
        out["stage"] = r.stage;
    if (r.obstruction) {
        const auto& ob = *r.obstruction;
        Json cert = Json::array();
        for (std::size_t i = 0; i < ob.certificate.size(); ++i)
            if (ob.certificate[i] != 0)
                cert.push_back(Json{{"row", ob.system.row_labels[i]}, {"weight", to_string(ob.certificate[i])},
                                    {"rhs", to_string(ob.system.rhs[i])}});
        out["certificate"] = Json{{"stage", ob.system.stage}, {"rows", ob.system.matrix.size()},
                                  {"unknowns", ob.system.matrix.empty() ? 0 : ob.system.matrix[0].size()},
                                  {"truncated", ob.system.truncated}, {"combination", cert}};
    }
    if (!r.detail.empty())
        out["detail"] = r.detail;
    out["nodes"] = r.nodes;
    return out;
}

Json suite_to_json(const SuiteReport& r) {
    return Json{{"suite", r.name}, {"cases", r.cases},    {"passed", r.passed},
                {"failed", r.cases - r.passed}, {"ok", r.ok()}, {"failures", r.failures}, {"notes", r.notes}};
}

} // namespace hs
