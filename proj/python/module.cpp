// pybind11 bindings for the core operations. Partitions cross the boundary as
// plain lists of ints; reports and tables as dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "symmid/betti.hpp"
#include "symmid/chains.hpp"
#include "symmid/errors.hpp"
#include "symmid/ext_invariants.hpp"
#include "symmid/ideal.hpp"
#include "symmid/powers.hpp"
#include "symmid/zset.hpp"

namespace py = pybind11;

namespace {

using namespace symmid;

Partition to_partition(const std::vector<int>& parts) { return Partition::sorted(parts); }

std::vector<std::vector<int>> from_partitions(const std::vector<Partition>& v) {
    std::vector<std::vector<int>> out;
    out.reserve(v.size());
    for (const Partition& p : v) out.push_back(p.parts());
    return out;
}

std::vector<Partition> to_partitions(const std::vector<std::vector<int>>& v) {
    std::vector<Partition> out;
    out.reserve(v.size());
    for (const std::vector<int>& p : v) out.push_back(to_partition(p));
    return out;
}

py::dict zpair_dict(const ZPair& pair, int n) {
    py::dict d;
    d["z"] = pair.z.parts();
    d["l"] = pair.l;
    d["reg_term"] = pair.z.sum() + pair.l + 1;
    d["pdim_term"] = n - 1 - pair.l;
    return d;
}

py::list zpairs_list(const std::vector<ZPair>& pairs, int n) {
    py::list out;
    for (const ZPair& pair : pairs) out.append(zpair_dict(pair, n));
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "combinatorial homological invariants of symmetric monomial ideals";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
    py::register_exception<TheoremViolation>(m, "TheoremViolation", PyExc_AssertionError);

    py::class_<Ideal>(m, "Ideal")
        .def(py::init([](int n, const std::vector<std::vector<int>>& gens) {
                 return Ideal(n, to_partitions(gens));
             }),
             py::arg("n"), py::arg("generators"))
        .def_property_readonly("n", &Ideal::n)
        .def_property_readonly("generators",
                               [](const Ideal& x) { return from_partitions(x.generators()); })
        .def("is_zero", &Ideal::is_zero)
        .def("is_unit", &Ideal::is_unit)
        .def("contains", [](const Ideal& x, const std::vector<int>& u) {
            return x.contains_exponent(u);
        })
        .def("subset_of", &Ideal::subset_of)
        .def("sum", &Ideal::sum)
        .def("intersect", &Ideal::intersect)
        .def("saturate", &Ideal::saturate)
        .def("dimension",
             [](const Ideal& x) {
                 Ideal::DimensionData dd = x.small_dimension_data();
                 py::dict d;
                 d["p"] = dd.p;
                 d["dim"] = dd.dim;
                 d["codim"] = dd.codim;
                 return d;
             })
        .def("hilbert_function", &Ideal::quotient_hilbert_function, py::arg("degree_bound"))
        .def("__eq__", [](const Ideal& a, const Ideal& b) { return a == b; })
        .def("__repr__", [](const Ideal& x) {
            std::string out = "Ideal(n=" + std::to_string(x.n()) + ", generators=[";
            for (std::size_t g = 0; g < x.generators().size(); ++g) {
                if (g) out += ", ";
                out += "[";
                const auto& parts = x.generators()[g].parts();
                for (std::size_t i = 0; i < parts.size(); ++i) {
                    if (i) out += ",";
                    out += std::to_string(parts[i]);
                }
                out += "]";
            }
            return out + "])";
        });

    m.def("conjugate", [](const std::vector<int>& x) { return to_partition(x).conjugate().parts(); });
    m.def("truncate_columns", [](const std::vector<int>& x, int c) {
        return to_partition(x).truncate_columns(c).parts();
    });
    m.def("strip_columns", [](const std::vector<int>& x, int r) {
        return to_partition(x).strip_columns(r).parts();
    });
    m.def("leq", [](const std::vector<int>& x, const std::vector<int>& y) {
        return leq(to_partition(x), to_partition(y));
    });
    m.def("sup", [](const std::vector<int>& x, const std::vector<int>& y) {
        return sup(to_partition(x), to_partition(y)).parts();
    });
    m.def("dominance_leq", [](const std::vector<int>& x, const std::vector<int>& y) {
        return dominance_leq(to_partition(x), to_partition(y));
    });
    m.def("orbit", [](const std::vector<int>& x, int n) { return orbit(to_partition(x), n); });
    m.def("enumerate_box_partitions", [](int max_part, int max_len, int forced_prefix) {
        return from_partitions(enumerate_box_partitions(max_part, max_len, forced_prefix));
    });

    m.def("succ_ideal", [](const std::vector<int>& z, int l, int n) {
        return succ_ideal(to_partition(z), l, n);
    });
    m.def("y_family", [](const std::vector<int>& z, int l, int n) {
        YFamily fam = y_family(to_partition(z), l, n);
        return py::make_tuple(fam.y, fam.yprime);
    });

    m.def("z_set", [](const Ideal& x) { return zpairs_list(z_set(x), x.n()); });
    m.def("z_set_singleton", [](const std::vector<int>& x, int n) {
        return zpairs_list(z_set_singleton(to_partition(x), n), n);
    });
    m.def("zpair_member", [](const std::vector<int>& z, int l, const Ideal& x) {
        return zpair_member(ZPair{to_partition(z), l}, x);
    });
    m.def("zpair_member_via_lattice", [](const std::vector<int>& z, int l, const Ideal& x) {
        return zpair_member_via_lattice(ZPair{to_partition(z), l}, x);
    });
    m.def("admits_socle_embedding", [](const std::vector<int>& z, int l, const Ideal& x) {
        return admits_socle_embedding(to_partition(z), l, x);
    });

    m.def("invariants", [](const Ideal& x) {
        InvariantReport report = invariants(x);
        py::dict d;
        d["reg"] = report.reg;
        d["pdim"] = report.pdim;
        d["depth"] = report.depth;
        d["reg_witnesses"] = zpairs_list(report.reg_witnesses, x.n());
        d["pdim_witnesses"] = zpairs_list(report.pdim_witnesses, x.n());
        return d;
    });

    m.def("ext_character", [](const Ideal& x, int j, int vbound) {
        MultigradedCharacter chi = ext_character_quotient(x, j, vbound);
        py::list terms;
        for (const auto& [deg, mult] : chi.terms()) {
            py::dict t;
            t["deg"] = deg;
            t["mult"] = mult;
            terms.append(t);
        }
        py::dict d;
        d["n"] = chi.n();
        d["lo"] = chi.lo();
        d["hi"] = chi.hi();
        d["terms"] = terms;
        return d;
    }, py::arg("ideal"), py::arg("j"), py::arg("vbound") = 3);

    m.def("is_cohen_macaulay", [](const Ideal& x) {
        CohenMacaulayReport r = is_cohen_macaulay(x);
        py::dict d;
        d["cohen_macaulay"] = r.cohen_macaulay;
        d["unmixed"] = r.unmixed;
        d["dim"] = r.dim;
        d["levels"] = r.levels;
        return d;
    });

    m.def("scm_filtration", &sequentially_cm_filtration);
    m.def("jzl_invariants", [](const std::vector<int>& z, int l, int n) {
        auto [reg, pdim] = jzl_invariants(to_partition(z), l, n);
        return py::make_tuple(reg, pdim);
    });
    m.def("hilbert_function_jzl", [](const std::vector<int>& z, int l, int n, int bound) {
        return hilbert_function_Jzl(to_partition(z), l, n, bound);
    });
    m.def("ext_map_decomposition", [](const Ideal& x, const Ideal& y, int j) {
        ExtMapDecomposition dec = ext_map_decomposition(x, y, j);
        py::dict d;
        d["ker"] = zpairs_list(dec.ker, x.n());
        d["im"] = zpairs_list(dec.im, x.n());
        d["coker"] = zpairs_list(dec.coker, x.n());
        return d;
    });

    m.def("b_const", [](const std::vector<int>& w, int n) { return b_const(to_partition(w), n); });
    m.def("powers_support", [](const std::vector<int>& w, int d, int n) {
        return from_partitions(powers_support(to_partition(w), d, n));
    });
    m.def("reg_power_exact", [](const std::vector<int>& w, int d, int n) {
        return reg_power_exact(to_partition(w), d, n);
    });
    m.def("asymptotic_reg", [](const std::vector<int>& w, int n, int d) {
        return asymptotic_reg(to_partition(w), n, d);
    });
    m.def("bp_feasible", [](int d, const std::vector<int>& capacities,
                            const std::vector<int>& weights, int r, int n) {
        BallPackingProblem prob{n, d, to_partition(capacities), to_partition(weights), r};
        FeasibilityResult res = bp_feasible(prob);
        if (!res.feasible) return py::make_tuple(false, py::none());
        return py::make_tuple(true, py::cast(res.assignment.counts));
    }, py::arg("d"), py::arg("capacities"), py::arg("weights"), py::arg("r"), py::arg("n"));
    m.def("is_symmetric_shifted", &is_symmetric_shifted);
    m.def("is_symmetric_strongly_shifted", &is_symmetric_strongly_shifted);
    m.def("has_linear_resolution", &has_linear_resolution);

    m.def("truncate_to_n", [](const std::vector<std::vector<int>>& x, int n) {
        return truncate_to_n(to_partitions(x), n);
    });
    m.def("chain_profile", [](const std::vector<std::vector<int>>& x) {
        ChainProfile profile = chain_profile(to_partitions(x));
        py::dict d;
        d["m"] = profile.m;
        d["w"] = profile.w;
        d["W"] = profile.big_w;
        d["Y"] = from_partitions(profile.y);
        d["C"] = profile.c;
        d["threshold"] = profile.threshold;
        return d;
    });
    m.def("reg_chain", [](const std::vector<std::vector<int>>& x, int n, bool verify) {
        ChainReg reg = reg_chain(chain_profile(to_partitions(x)), n, verify);
        return py::make_tuple(reg.value, reg.formula ? "formula" : "exact");
    }, py::arg("x"), py::arg("n"), py::arg("verify") = false);

    m.def("betti_table", [](const Ideal& x, int field) {
        BettiTable table = betti_numbers(expand_orbits(x), field);
        py::dict entries;
        for (const auto& [key, value] : table.entries)
            entries[py::make_tuple(key.first, key.second)] = value;
        py::dict d;
        d["field"] = table.field_char;
        d["reg"] = table.reg();
        d["pdim"] = table.pdim();
        d["entries"] = entries;
        return d;
    }, py::arg("ideal"), py::arg("field") = 2);
    m.def("oracle_invariants", [](const Ideal& x, int field) {
        auto [reg, pdim] = oracle_invariants(expand_orbits(x), field);
        return py::make_tuple(reg, pdim);
    }, py::arg("ideal"), py::arg("field") = 2);
}
