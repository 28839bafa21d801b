#include "adictop/verify.hpp"

#include "adictop/curve.hpp"
#include "adictop/linalg.hpp"
#include "adictop/parser.hpp"
#include "adictop/rings.hpp"

namespace adictop {

namespace {

Field field_from_name(const std::string& name) {
    if (name == "Q") return Field::Q;
    if (name == "Qt") return Field::Qt;
    throw DomainError("unknown field tag '" + name + "'");
}

std::string field_tag(Field f) { return f == Field::Q ? "Q" : "Qt"; }

std::map<std::string, Ground> environment(const Json& args, Field field) {
    std::map<std::string, Ground> env;
    if (field == Field::Qt) env.emplace("t", Ground(RatFunc::variable()));
    if (args.contains("bindings"))
        for (auto it = args.at("bindings").begin(); it != args.at("bindings").end(); ++it)
            env[it.key()] = parse_ground(it.value().get<std::string>(), field);
    return env;
}

Ground eval_in(const Json& args, const std::string& key, Field field) {
    return eval_ground(parse_expression(args.at(key).get<std::string>()),
                       environment(args, field));
}

Json bindings_json(const Bindings& b) {
    Json j = Json::object();
    for (const auto& [k, v] : b) j[k] = v;
    return j;
}

Check run(const std::string& op, Json args, const std::string& note) {
    Check c;
    c.op = op;
    c.args = std::move(args);
    c.note = note;
    c.holds = verify_check(c);
    return c;
}

}  // namespace

bool verify_check(const Check& check) {
    const Json& a = check.args;
    const std::string& op = check.op;

    if (op == "eq") {
        Field f = field_from_name(a.at("field").get<std::string>());
        return eval_in(a, "lhs", f) == eval_in(a, "rhs", f);
    }
    if (op == "val_ge" || op == "val_eq" || op == "val_lt") {
        ValuationSpec place = ValuationSpec::from_label(a.at("place").get<std::string>());
        Ground x = eval_in(a, "x", place.field());
        ValOrInf v = val(x, place);
        long bound = a.at("bound").get<long>();
        if (op == "val_ge") return v.at_least(bound);
        if (op == "val_eq") return v == ValOrInf::of(bound);
        return v < ValOrInf::of(bound);
    }
    if (op == "val_inf") {
        ValuationSpec place = ValuationSpec::from_label(a.at("place").get<std::string>());
        return val(eval_in(a, "x", place.field()), place).is_infinite();
    }
    if (op == "in_ring" || op == "not_in_ring") {
        RingDescriptor r = parse_ring(a.at("ring").get<std::string>());
        bool in = contains(r, eval_in(a, "x", r.field()));
        return op == "in_ring" ? in : !in;
    }
    if (op == "in_nbhd" || op == "not_in_nbhd") {
        RingDescriptor r = parse_ring(a.at("ring").get<std::string>());
        Field f = r.field();
        NeighborhoodDescriptor n(r, parse_ground(a.at("scale").get<std::string>(), f),
                                 parse_ground(a.at("center").get<std::string>(), f));
        bool in = in_neighborhood(n, eval_in(a, "x", f));
        return op == "in_nbhd" ? in : !in;
    }
    if (op == "place_in_support") {
        TopologyDescriptor t = parse_topology(a.at("topology").get<std::string>());
        ValuationSpec place = ValuationSpec::from_label(a.at("place").get<std::string>());
        for (const ValuationSpec& v : t.support())
            if (v == place) return true;
        return false;
    }
    if (op == "membership_conjunction") {
        RingDescriptor r = parse_ring(a.at("ring").get<std::string>());
        Ground x = eval_in(a, "x", r.field());
        bool all = true;
        for (const Json& comp : a.at("components"))
            all = all && contains(parse_ring(comp.get<std::string>()), x);
        return contains(r, x) == all;
    }
    if (op == "linear_infeasible") {
        RatMatrix m;
        for (const Json& row : a.at("matrix")) {
            RatVector r;
            for (const Json& cell : row) r.push_back(parse_rational(cell.get<std::string>()));
            m.push_back(std::move(r));
        }
        RatVector rhs;
        for (const Json& cell : a.at("rhs")) rhs.push_back(parse_rational(cell.get<std::string>()));
        return linear_infeasible(m, rhs);
    }
    if (op == "is_prime") return is_prime(Int(a.at("n").get<std::string>()));
    if (op == "distinct") {
        Field f = field_from_name(a.at("field").get<std::string>());
        std::vector<Ground> vals;
        for (const Json& v : a.at("values")) vals.push_back(parse_ground(v.get<std::string>(), f));
        for (size_t i = 0; i < vals.size(); ++i)
            for (size_t j = i + 1; j < vals.size(); ++j)
                if (vals[i] == vals[j]) return false;
        return true;
    }
    if (op == "ord_at") {
        RatFunc f = parse_ratfunc(a.at("f").get<std::string>(), "x");
        return ord_at(f, P1Point::parse(a.at("point").get<std::string>())) ==
               a.at("ord").get<long>();
    }
    if (op == "poles_within") {
        RatFunc f = parse_ratfunc(a.at("f").get<std::string>(), "x");
        std::vector<P1Point> pts;
        for (const Json& p : a.at("points")) pts.push_back(P1Point::parse(p.get<std::string>()));
        return poles_within(f, pts);
    }
    if (op == "degree_is") {
        RatFunc f = parse_ratfunc(a.at("f").get<std::string>(), "x");
        return map_degree(f) == a.at("n").get<long>();
    }
    throw DomainError("unknown check op '" + op + "'");
}

VerifyOutcome verify_certificate(const Certificate& cert) {
    VerifyOutcome out;
    for (size_t i = 0; i < cert.checks.size(); ++i) {
        const Check& c = cert.checks[i];
        ++out.checked;
        bool recomputed;
        try {
            recomputed = verify_check(c);
        } catch (const std::exception& e) {
            out.ok = false;
            out.failures.push_back("check " + std::to_string(i) + " (" + c.op +
                                   "): " + e.what());
            continue;
        }
        if (recomputed != c.holds) {
            out.ok = false;
            out.failures.push_back("check " + std::to_string(i) + " (" + c.op +
                                   "): recomputation disagrees with the recorded result");
        }
    }
    return out;
}

Check check_eq(Field field, const std::string& lhs, const std::string& rhs,
               const Bindings& bindings, const std::string& note) {
    Json a;
    a["field"] = field_tag(field);
    a["lhs"] = lhs;
    a["rhs"] = rhs;
    if (!bindings.empty()) a["bindings"] = bindings_json(bindings);
    return run("eq", std::move(a), note);
}

namespace {

Check val_check(const std::string& op, const std::string& x, const ValuationSpec& place,
                std::optional<long> bound, const Bindings& bindings, const std::string& note) {
    Json a;
    a["x"] = x;
    a["place"] = place.label();
    if (bound) a["bound"] = *bound;
    if (!bindings.empty()) a["bindings"] = bindings_json(bindings);
    return run(op, std::move(a), note);
}

}  // namespace

Check check_val_ge(const std::string& x, const ValuationSpec& place, long bound,
                   const Bindings& bindings, const std::string& note) {
    return val_check("val_ge", x, place, bound, bindings, note);
}

Check check_val_eq(const std::string& x, const ValuationSpec& place, long bound,
                   const Bindings& bindings, const std::string& note) {
    return val_check("val_eq", x, place, bound, bindings, note);
}

Check check_val_lt(const std::string& x, const ValuationSpec& place, long bound,
                   const Bindings& bindings, const std::string& note) {
    return val_check("val_lt", x, place, bound, bindings, note);
}

Check check_val_inf(const std::string& x, const ValuationSpec& place, const Bindings& bindings,
                    const std::string& note) {
    return val_check("val_inf", x, place, std::nullopt, bindings, note);
}

Check check_in_ring(const std::string& ring, const std::string& x, const Bindings& bindings,
                    const std::string& note) {
    Json a;
    a["ring"] = ring;
    a["x"] = x;
    if (!bindings.empty()) a["bindings"] = bindings_json(bindings);
    return run("in_ring", std::move(a), note);
}

Check check_not_in_ring(const std::string& ring, const std::string& x, const Bindings& bindings,
                        const std::string& note) {
    Json a;
    a["ring"] = ring;
    a["x"] = x;
    if (!bindings.empty()) a["bindings"] = bindings_json(bindings);
    return run("not_in_ring", std::move(a), note);
}

namespace {

Check nbhd_check(const std::string& op, const std::string& ring, const std::string& scale,
                 const std::string& center, const std::string& x, const Bindings& bindings,
                 const std::string& note) {
    Json a;
    a["ring"] = ring;
    a["scale"] = scale;
    a["center"] = center;
    a["x"] = x;
    if (!bindings.empty()) a["bindings"] = bindings_json(bindings);
    return run(op, std::move(a), note);
}

}  // namespace

Check check_in_nbhd(const std::string& ring, const std::string& scale, const std::string& center,
                    const std::string& x, const Bindings& bindings, const std::string& note) {
    return nbhd_check("in_nbhd", ring, scale, center, x, bindings, note);
}

Check check_not_in_nbhd(const std::string& ring, const std::string& scale,
                        const std::string& center, const std::string& x,
                        const Bindings& bindings, const std::string& note) {
    return nbhd_check("not_in_nbhd", ring, scale, center, x, bindings, note);
}

Check check_place_in_support(const std::string& topology, const ValuationSpec& place,
                             const std::string& note) {
    Json a;
    a["topology"] = topology;
    a["place"] = place.label();
    return run("place_in_support", std::move(a), note);
}

Check check_membership_conjunction(const std::string& ring,
                                   const std::vector<std::string>& components,
                                   const std::string& x, const std::string& note) {
    Json a;
    a["ring"] = ring;
    Json comps = Json::array();
    for (const std::string& c : components) comps.push_back(c);
    a["components"] = comps;
    a["x"] = x;
    return run("membership_conjunction", std::move(a), note);
}

Check check_linear_infeasible(const std::vector<std::vector<Rat>>& matrix,
                              const std::vector<Rat>& rhs, const std::string& note) {
    Json a;
    Json m = Json::array();
    for (const auto& row : matrix) {
        Json r = Json::array();
        for (const Rat& cell : row) r.push_back(rat_to_string(cell));
        m.push_back(r);
    }
    a["matrix"] = m;
    Json b = Json::array();
    for (const Rat& cell : rhs) b.push_back(rat_to_string(cell));
    a["rhs"] = b;
    return run("linear_infeasible", std::move(a), note);
}

Check check_is_prime(const Int& n, const std::string& note) {
    Json a;
    a["n"] = int_to_string(n);
    return run("is_prime", std::move(a), note);
}

Check check_distinct(Field field, const std::vector<std::string>& values,
                     const std::string& note) {
    Json a;
    a["field"] = field_tag(field);
    Json v = Json::array();
    for (const std::string& s : values) v.push_back(s);
    a["values"] = v;
    return run("distinct", std::move(a), note);
}

Check check_ord_at(const std::string& f, const std::string& point, long ord,
                   const std::string& note) {
    Json a;
    a["f"] = f;
    a["point"] = point;
    a["ord"] = ord;
    return run("ord_at", std::move(a), note);
}

Check check_poles_within(const std::string& f, const std::vector<std::string>& points,
                         const std::string& note) {
    Json a;
    a["f"] = f;
    Json p = Json::array();
    for (const std::string& s : points) p.push_back(s);
    a["points"] = p;
    return run("poles_within", std::move(a), note);
}

Check check_degree_is(const std::string& f, long n, const std::string& note) {
    Json a;
    a["f"] = f;
    a["n"] = n;
    return run("degree_is", std::move(a), note);
}

}  // namespace adictop
