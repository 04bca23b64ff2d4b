#include "condlab/condlab.h"

#include <cstring>
#include <filesystem>
#include <string>

#include "condlab/statements.hpp"
#include "json.hpp"

using namespace condlab;
using nlohmann::json;

struct cl_ring {
  RingPtr ring;
};
struct cl_ideal {
  Ideal ideal;
};
struct cl_curve {
  Fixture fixture;
};
struct cl_reports {
  std::vector<VerdictReport> items;
};

namespace {

thread_local std::string last_error;

cl_status fail(cl_status s, const std::string& what) {
  last_error = what;
  return s;
}

// Runs `body`, mapping engine exceptions onto status codes.
template <class F>
cl_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const ParseError& e) {
    return fail(CL_ERR_PARSE, e.what());
  } catch (const ContextMismatch& e) {
    return fail(CL_ERR_CONTEXT, e.what());
  } catch (const PreconditionError& e) {
    return fail(CL_ERR_PRECONDITION, e.what());
  } catch (const ComputationLimit& e) {
    return fail(CL_ERR_LIMIT, e.what());
  } catch (const CertificateFailure& e) {
    return fail(CL_ERR_CERTIFICATE, e.what());
  } catch (const RetryBudgetExhausted& e) {
    return fail(CL_ERR_RETRY, e.what());
  } catch (const std::bad_alloc&) {
    return fail(CL_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CL_ERR_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

EngineConfig config_with(int degree_cap) {
  EngineConfig cfg;
  if (degree_cap > 0) cfg.degree_cap = degree_cap;
  return cfg;
}

#define CL_REQUIRE(cond)                                           \
  do {                                                             \
    if (!(cond)) return fail(CL_ERR_ARGUMENT, "null argument: " #cond); \
  } while (0)

cl_status store(cl_ideal** out, Ideal ideal) {
  *out = new cl_ideal{std::move(ideal)};
  return CL_OK;
}

json betti_json(const BettiTable& t) { return json::parse(t.json()); }

StatementOptions statement_options(const cl_options* o) {
  StatementOptions s;
  if (!o) return s;
  if (o->seed) s.seed = o->seed;
  if (o->prime) s.prime = o->prime;
  if (o->degree_cap > 0) s.degree_cap = o->degree_cap;
  if (o->lines > 0) s.lines = o->lines;
  if (o->degree > 0) s.degree = o->degree;
  if (o->m > 0) s.m = o->m;
  return s;
}

}  // namespace

extern "C" {

const char* cl_version(void) { return "0.1.0"; }
const char* cl_last_error(void) { return last_error.c_str(); }

const char* cl_status_name(cl_status status) {
  switch (status) {
    case CL_OK: return "ok";
    case CL_ERR_PARSE: return "parse error";
    case CL_ERR_CONTEXT: return "context mismatch";
    case CL_ERR_PRECONDITION: return "precondition violated";
    case CL_ERR_LIMIT: return "computation limit";
    case CL_ERR_CERTIFICATE: return "certificate failure";
    case CL_ERR_RETRY: return "retry budget exhausted";
    case CL_ERR_INTERNAL: return "internal error";
    case CL_ERR_ARGUMENT: return "invalid argument";
    case CL_ERR_IO: return "i/o error";
  }
  return "unknown";
}

void cl_string_free(char* s) { std::free(s); }

// --- rings ---

cl_status cl_ring_parse(const char* header, int degree_cap, cl_ring** out) {
  CL_REQUIRE(header && out);
  return guarded([&] {
    *out = new cl_ring{parse_ring_header(header, config_with(degree_cap))};
    return CL_OK;
  });
}

cl_status cl_ring_standard(int num_vars, uint32_t prime, int degree_cap, cl_ring** out) {
  CL_REQUIRE(out);
  return guarded([&] {
    *out = new cl_ring{Ring::standard(num_vars, prime ? prime : 32003, config_with(degree_cap))};
    return CL_OK;
  });
}

uint32_t cl_ring_prime(const cl_ring* ring) { return ring ? ring->ring->characteristic() : 0; }
int cl_ring_num_vars(const cl_ring* ring) { return ring ? ring->ring->num_vars() : 0; }
void cl_ring_free(cl_ring* ring) { delete ring; }

// --- ideals ---

cl_status cl_ideal_create(const cl_ring* ring, const char* const* generators, size_t count, cl_ideal** out) {
  CL_REQUIRE(ring && out && (generators || count == 0));
  return guarded([&] {
    std::vector<Polynomial> gens;
    for (size_t k = 0; k < count; ++k) {
      if (!generators[k]) return fail(CL_ERR_ARGUMENT, "null generator");
      gens.push_back(parse_polynomial(generators[k], ring->ring));
    }
    return store(out, Ideal(ring->ring, gens));
  });
}

cl_status cl_ideal_parse(const char* text, int degree_cap, cl_ideal** out) {
  CL_REQUIRE(text && out);
  return guarded([&] { return store(out, parse_ideal_input(text, config_with(degree_cap))); });
}

cl_status cl_ideal_load(const char* path, int degree_cap, cl_ideal** out) {
  CL_REQUIRE(path && out);
  return guarded([&] {
    std::string text;
    try {
      text = read_text_file(path);
    } catch (const PreconditionError& e) {
      return fail(CL_ERR_IO, e.what());
    }
    return store(out, parse_ideal_input(text, config_with(degree_cap)));
  });
}

cl_status cl_ideal_with_prime(const cl_ideal* ideal, uint32_t prime, cl_ideal** out) {
  CL_REQUIRE(ideal && out);
  return guarded([&] {
    const Ideal& I = ideal->ideal;
    RingPtr target = I.ring()->with_prime(prime);
    const PrimeField& from = I.ring()->field();
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators()) {
      std::vector<Term> terms;
      for (const auto& t : g.terms()) terms.push_back({t.m, target->field().from_signed(from.to_signed(t.c))});
      gens.push_back(Polynomial::from_terms(target, std::move(terms)));
    }
    return store(out, Ideal(target, gens));
  });
}

void cl_ideal_free(cl_ideal* ideal) { delete ideal; }

size_t cl_ideal_num_generators(const cl_ideal* ideal) { return ideal ? ideal->ideal.generators().size() : 0; }

cl_status cl_ideal_generator(const cl_ideal* ideal, size_t index, char** out) {
  CL_REQUIRE(ideal && out);
  if (index >= ideal->ideal.generators().size()) return fail(CL_ERR_ARGUMENT, "generator index out of range");
  return guarded([&] {
    *out = dup(ideal->ideal.generators()[index].to_string());
    return CL_OK;
  });
}

cl_status cl_ideal_contains(const cl_ideal* ideal, const char* polynomial, int* out) {
  CL_REQUIRE(ideal && polynomial && out);
  return guarded([&] {
    *out = ideal->ideal.contains(parse_polynomial(polynomial, ideal->ideal.ring())) ? 1 : 0;
    return CL_OK;
  });
}

cl_status cl_ideal_equal(const cl_ideal* a, const cl_ideal* b, int* out) {
  CL_REQUIRE(a && b && out);
  return guarded([&] {
    *out = a->ideal == b->ideal ? 1 : 0;
    return CL_OK;
  });
}

cl_status cl_ideal_sum(const cl_ideal* a, const cl_ideal* b, cl_ideal** out) {
  CL_REQUIRE(a && b && out);
  return guarded([&] { return store(out, ideal_sum(a->ideal, b->ideal)); });
}

cl_status cl_ideal_product(const cl_ideal* a, const cl_ideal* b, cl_ideal** out) {
  CL_REQUIRE(a && b && out);
  return guarded([&] { return store(out, ideal_product(a->ideal, b->ideal)); });
}

cl_status cl_ideal_intersect(const cl_ideal* a, const cl_ideal* b, cl_ideal** out) {
  CL_REQUIRE(a && b && out);
  return guarded([&] { return store(out, ideal_intersection(a->ideal, b->ideal)); });
}

cl_status cl_ideal_quotient(const cl_ideal* a, const cl_ideal* b, cl_ideal** out) {
  CL_REQUIRE(a && b && out);
  return guarded([&] { return store(out, ideal_quotient(a->ideal, b->ideal)); });
}

cl_status cl_ideal_saturate(const cl_ideal* ideal, cl_ideal** out) {
  CL_REQUIRE(ideal && out);
  return guarded([&] { return store(out, saturate(ideal->ideal)); });
}

cl_status cl_ideal_codimension(const cl_ideal* ideal, int* out) {
  CL_REQUIRE(ideal && out);
  return guarded([&] {
    *out = codimension(ideal->ideal);
    return CL_OK;
  });
}

cl_status cl_ideal_groebner(const cl_ideal* ideal, int trace, int as_json, char** out) {
  CL_REQUIRE(ideal && out);
  return guarded([&] {
    const Ideal& I = ideal->ideal;
    GbOptions opts;
    opts.record_trace = trace != 0;
    GroebnerBasis gb = buchberger(I.generators(), I.ring()->order(), opts);
    std::vector<std::string> elems;
    for (const auto& p : gb.polynomials()) elems.push_back(p.to_string());
    if (as_json) {
      json j;
      j["prime"] = I.ring()->characteristic();
      j["basis"] = elems;
      j["stats"] = {{"pairs_considered", gb.stats().pairs_considered},
                    {"pairs_reduced", gb.stats().pairs_reduced},
                    {"zero_reductions", gb.stats().zero_reductions},
                    {"max_degree", gb.stats().max_degree}};
      if (trace) j["trace"] = gb.trace();
      *out = dup(j.dump(2));
    } else {
      std::string s;
      for (const auto& e : elems) s += e + "\n";
      if (trace) {
        s += "-- trace\n";
        for (const auto& t : gb.trace()) s += t + "\n";
      }
      *out = dup(s);
    }
    return CL_OK;
  });
}

cl_status cl_ideal_resolve(const cl_ideal* ideal, int as_json, char** out) {
  CL_REQUIRE(ideal && out);
  return guarded([&] {
    const Ideal& I = ideal->ideal;
    FreeResolution res = minimal_free_resolution(I.ring(), I.generators());
    json mods = json::array(), maps = json::array();
    for (const auto& m : res.modules) mods.push_back(m.twists);
    for (const auto& m : res.maps) {
      json rows = json::array();
      for (int a = 0; a < m.rows(); ++a) {
        json row = json::array();
        for (int b = 0; b < m.cols(); ++b) row.push_back(m.entry(a, b).to_string());
        rows.push_back(row);
      }
      maps.push_back(rows);
    }
    if (as_json) {
      json j{{"prime", I.ring()->characteristic()}, {"length", res.length()}, {"twists", mods}, {"maps", maps}};
      *out = dup(j.dump(2));
      return CL_OK;
    }
    std::string s;
    for (std::size_t i = 0; i < res.modules.size(); ++i) {
      s += "F" + std::to_string(i) + ": rank " + std::to_string(res.modules[i].rank()) + ", twists";
      for (int t : res.modules[i].twists) s += " " + std::to_string(t);
      s += "\n";
    }
    for (std::size_t i = 0; i < res.maps.size(); ++i) {
      s += "d" + std::to_string(i + 1) + ":\n";
      for (const auto& row : maps[i]) {
        s += " ";
        for (const auto& e : row) s += " [" + e.get<std::string>() + "]";
        s += "\n";
      }
    }
    *out = dup(s);
    return CL_OK;
  });
}

cl_status cl_ideal_betti(const cl_ideal* ideal, int as_json, char** out) {
  CL_REQUIRE(ideal && out);
  return guarded([&] {
    const Ideal& I = ideal->ideal;
    BettiTable t = betti_table(minimal_free_resolution(I.ring(), I.generators()), BettiTag::Ideal);
    if (as_json) {
      json j{{"prime", I.ring()->characteristic()}, {"regularity", regularity(t)}, {"betti", betti_json(t)}};
      *out = dup(j.dump(2));
    } else {
      *out = dup(t.grid() + "\nreg = " + std::to_string(regularity(t)) + "\n");
    }
    return CL_OK;
  });
}

cl_status cl_ideal_hilbert(const cl_ideal* ideal, int max_degree, int as_json, char** out) {
  CL_REQUIRE(ideal && out);
  if (max_degree < 0) return fail(CL_ERR_ARGUMENT, "negative max degree");
  return guarded([&] {
    const Ideal& I = ideal->ideal;
    HilbertData h = hilbert_function(I.ring(), I.generators(), max_degree);
    if (as_json) {
      json vals = json::array();
      for (const auto& [e, v] : h.values) vals.push_back(v);
      json j{{"prime", I.ring()->characteristic()},
             {"values", vals},
             {"polynomial", {{"slope", h.hp_slope}, {"constant", h.hp_constant}}},
             {"agreement_degree", h.agreement_degree}};
      *out = dup(j.dump(2));
    } else {
      std::string s = "HF:";
      for (const auto& [e, v] : h.values) s += " " + std::to_string(v);
      s += "\nHP: " + std::to_string(h.hp_slope) + "*e + " + std::to_string(h.hp_constant) +
           " (from degree " + std::to_string(h.agreement_degree) + ")\n";
      *out = dup(s);
    }
    return CL_OK;
  });
}

// --- curves ---

cl_status cl_curve_parse(const char* text, const char* name, int degree_cap, cl_curve** out) {
  CL_REQUIRE(text && out);
  return guarded([&] {
    *out = new cl_curve{parse_fixture(text, name ? name : "", config_with(degree_cap))};
    return CL_OK;
  });
}

cl_status cl_curve_load(const char* path, int degree_cap, cl_curve** out) {
  CL_REQUIRE(path && out);
  return guarded([&] {
    std::string text;
    try {
      text = read_text_file(path);
    } catch (const PreconditionError& e) {
      return fail(CL_ERR_IO, e.what());
    }
    *out = new cl_curve{parse_fixture(text, std::filesystem::path(path).stem().string(), config_with(degree_cap))};
    return CL_OK;
  });
}

cl_status cl_curve_with_prime(const cl_curve* curve, uint32_t prime, cl_curve** out) {
  CL_REQUIRE(curve && out);
  return guarded([&] {
    Fixture f = curve->fixture;
    f.spec = f.spec.with_prime(prime);
    *out = new cl_curve{std::move(f)};
    return CL_OK;
  });
}

void cl_curve_free(cl_curve* curve) { delete curve; }
int cl_curve_degree(const cl_curve* curve) { return curve ? curve->fixture.spec.degree() : 0; }
int cl_curve_num_components(const cl_curve* curve) {
  if (!curve) return 0;
  return curve->fixture.components_known ? curve->fixture.spec.num_components() : 0;
}

cl_status cl_curve_conductor(const cl_curve* curve, uint64_t seed, int as_json, char** out) {
  CL_REQUIRE(curve && out);
  return guarded([&] {
    const CurveSpec& s = curve->fixture.spec;
    if (!seed) seed = 1;
    ConductorReport r = curve->fixture.components_known ? conductor_from_components(s, seed)
                                                        : conductor_nodal(s.total_form(), seed);
    std::vector<std::string> gens;
    for (const auto& g : r.conductor.generators()) gens.push_back(g.to_string());
    json j{{"prime", s.ring()->characteristic()},
           {"seed", seed},
           {"d", r.degree},
           {"route", to_string(r.route)},
           {"conductor", gens},
           {"smooth", r.smooth()},
           {"delta", r.delta},
           {"regularity", r.regularity},
           {"degree_d_syzygies", r.degree_d_syzygies},
           {"h0_jump_degree", r.h0_jump_degree},
           {"betti", betti_json(r.betti)}};
    if (as_json) {
      *out = dup(j.dump(2));
      return CL_OK;
    }
    std::string t = "conductor (" + to_string(r.route) + ", p=" + std::to_string(s.ring()->characteristic()) +
                    ", seed=" + std::to_string(seed) + ")\n";
    if (r.smooth()) {
      t += "  unit ideal: the curve is smooth\n";
    } else {
      for (const auto& g : gens) t += "  " + g + "\n";
      t += "delta = " + std::to_string(r.delta) + "\nreg = " + std::to_string(r.regularity) +
           "\nbeta_1_d = " + std::to_string(r.degree_d_syzygies) +
           "\nh0_jump_degree = " + std::to_string(r.h0_jump_degree) + "\n" + r.betti.grid() + "\n";
    }
    *out = dup(t);
    return CL_OK;
  });
}

// --- verification ---

size_t cl_statement_count(void) { return statement_ids().size(); }
const char* cl_statement_id(size_t index) {
  return index < statement_ids().size() ? statement_ids()[index].c_str() : nullptr;
}

cl_status cl_verify_statement(const char* id, const cl_options* options, cl_reports** out) {
  CL_REQUIRE(id && out);
  return guarded([&] {
    if (!is_statement_id(id)) return fail(CL_ERR_ARGUMENT, std::string("unknown statement '") + id + "'");
    *out = new cl_reports{run_statement(id, statement_options(options))};
    return CL_OK;
  });
}

cl_status cl_verify_all(const cl_options* options, cl_reports** out) {
  CL_REQUIRE(out);
  return guarded([&] {
    *out = new cl_reports{run_all_statements(statement_options(options))};
    return CL_OK;
  });
}

cl_status cl_verify_curve(const cl_curve* curve, uint64_t seed, cl_reports** out) {
  CL_REQUIRE(curve && out);
  return guarded([&] {
    *out = new cl_reports{verify_fixture(curve->fixture, seed ? seed : 1)};
    return CL_OK;
  });
}

cl_status cl_reports_create(cl_reports** out) {
  CL_REQUIRE(out);
  *out = new cl_reports{};
  return CL_OK;
}

cl_status cl_reports_append(cl_reports* dst, cl_reports* src) {
  CL_REQUIRE(dst && src);
  if (dst == src) return fail(CL_ERR_ARGUMENT, "cannot append a report set to itself");
  for (auto& r : src->items) dst->items.push_back(std::move(r));
  src->items.clear();
  return CL_OK;
}

cl_status cl_reports_annotate(cl_reports* reports, const char* note) {
  CL_REQUIRE(reports && note);
  for (auto& r : reports->items) r.note(note);
  return CL_OK;
}

void cl_reports_free(cl_reports* reports) { delete reports; }
size_t cl_reports_count(const cl_reports* reports) { return reports ? reports->items.size() : 0; }

int cl_reports_all_pass(const cl_reports* reports) {
  if (!reports) return 0;
  for (const auto& r : reports->items)
    if (!r.pass()) return 0;
  return 1;
}

const char* cl_report_statement(const cl_reports* reports, size_t index) {
  if (!reports || index >= reports->items.size()) return nullptr;
  return reports->items[index].statement_id.c_str();
}

int cl_report_pass(const cl_reports* reports, size_t index) {
  if (!reports || index >= reports->items.size()) return 0;
  return reports->items[index].pass() ? 1 : 0;
}

uint32_t cl_report_prime(const cl_reports* reports, size_t index) {
  if (!reports || index >= reports->items.size()) return 0;
  return reports->items[index].prime;
}

cl_status cl_report_text(const cl_reports* reports, size_t index, char** out) {
  CL_REQUIRE(reports && out);
  if (index >= reports->items.size()) return fail(CL_ERR_ARGUMENT, "report index out of range");
  return guarded([&] {
    *out = dup(reports->items[index].to_text());
    return CL_OK;
  });
}

cl_status cl_reports_json(const cl_reports* reports, char** out) {
  CL_REQUIRE(reports && out);
  return guarded([&] {
    *out = dup(reports_to_json(reports->items));
    return CL_OK;
  });
}

}  // extern "C"
