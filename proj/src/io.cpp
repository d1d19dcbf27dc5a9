#include "smallcover/io.hpp"

#include <algorithm>
#include <sstream>

#include "smallcover/errors.hpp"

namespace smallcover {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw InvalidInput(where + ": " + what);
}

const Json& field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) bad(where, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) bad(where, std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t as_size(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) bad(where, "expected a non-negative integer");
  return j.get<std::size_t>();
}

std::vector<std::size_t> as_sizes(const Json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_size(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

// 0/1 list, bit string, or (when allow_scalar) a bare 0/1.
F2Vector as_bits(const Json& j, const std::string& where, bool allow_scalar) {
  if (j.is_string()) return F2Vector::parse(j.get<std::string>());
  if (allow_scalar && j.is_number_integer()) {
    const auto v = j.get<std::int64_t>();
    if (v != 0 && v != 1) bad(where, "expected 0 or 1");
    return F2Vector::of({static_cast<int>(v)});
  }
  if (!j.is_array()) bad(where, "expected a 0/1 list");
  F2Vector out(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer() || (j[i].get<std::int64_t>() != 0 && j[i].get<std::int64_t>() != 1)) {
      bad(where + "[" + std::to_string(i) + "]", "expected 0 or 1");
    }
    out.set(i, j[i].get<int>() == 1);
  }
  return out;
}

Json bits_json(const F2Vector& v) {
  Json a = Json::array();
  for (std::size_t i = 0; i < v.size(); ++i) a.push_back(v.get(i) ? 1 : 0);
  return a;
}

// A misspelt key would otherwise be silently ignored.
void only_keys(const Json& j, const std::string& where, std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, value] : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      bad(where, "unknown field \"" + key + "\"");
    }
  }
}

PolytopeSpec parse_polytope(const Json& j) {
  const std::string where = "polytope";
  const Json& type = field(j, "type", where);
  if (!type.is_string()) bad(where + ".type", "expected a string");
  PolytopeSpec p;
  const std::string t = type.get<std::string>();
  if (t == "product_of_simplices") {
    only_keys(j, where, {"type", "dims"});
    p.kind = PolytopeSpec::Kind::product_of_simplices;
    p.dims = as_sizes(field(j, "dims", where), where + ".dims");
  } else if (t == "dual_complex") {
    only_keys(j, where, {"type", "n", "facets", "maximal_simplices"});
    p.kind = PolytopeSpec::Kind::dual_complex;
    p.n = as_size(field(j, "n", where), where + ".n");
    p.facets = as_size(field(j, "facets", where), where + ".facets");
    const Json& ms = field(j, "maximal_simplices", where);
    if (!ms.is_array()) bad(where + ".maximal_simplices", "expected an array");
    for (std::size_t i = 0; i < ms.size(); ++i) {
      p.maximal_simplices.push_back(as_sizes(ms[i], where + ".maximal_simplices[" + std::to_string(i) + "]"));
    }
  } else {
    bad(where + ".type", "unknown polytope type \"" + t + "\"");
  }
  return p;
}

LambdaSpec parse_lambda(const Json& j) {
  const std::string where = "lambda";
  const Json& type = field(j, "type", where);
  if (!type.is_string()) bad(where + ".type", "expected a string");
  LambdaSpec l;
  const std::string t = type.get<std::string>();
  if (t == "bott") {
    only_keys(j, where, {"type", "dims", "lower_blocks", "blocks"});
    l.dims = as_sizes(field(j, "dims", where), where + ".dims");
    const bool has_lower = j.contains("lower_blocks");
    const bool has_blocks = j.contains("blocks");
    if (has_lower == has_blocks) bad(where, "bott lambda needs exactly one of \"lower_blocks\" or \"blocks\"");
    if (has_lower) {
      l.kind = LambdaSpec::Kind::bott_lower;
      const Json& lb = j["lower_blocks"];
      if (lb.is_string()) {
        // Concatenated bits, split by block lengths.
        l.lower_blocks = BottMatrix::from_lower_bits(l.dims, lb.get<std::string>()).lower_blocks();
      } else {
        if (!lb.is_array()) bad(where + ".lower_blocks", "expected an array or a bit string");
        for (std::size_t i = 0; i < lb.size(); ++i) {
          l.lower_blocks.push_back(as_bits(lb[i], where + ".lower_blocks[" + std::to_string(i) + "]", true));
        }
      }
    } else {
      l.kind = LambdaSpec::Kind::bott_blocks;
      const Json& bl = j["blocks"];
      if (!bl.is_array()) bad(where + ".blocks", "expected an array of rows");
      for (std::size_t k = 0; k < bl.size(); ++k) {
        const std::string wk = where + ".blocks[" + std::to_string(k) + "]";
        if (!bl[k].is_array()) bad(wk, "expected an array");
        std::vector<F2Vector> row;
        for (std::size_t jj = 0; jj < bl[k].size(); ++jj) {
          row.push_back(as_bits(bl[k][jj], wk + "[" + std::to_string(jj) + "]", true));
        }
        l.blocks.push_back(std::move(row));
      }
    }
  } else if (t == "explicit") {
    only_keys(j, where, {"type", "n", "vectors"});
    l.kind = LambdaSpec::Kind::explicit_vectors;
    l.n = as_size(field(j, "n", where), where + ".n");
    const Json& vs = field(j, "vectors", where);
    if (!vs.is_array()) bad(where + ".vectors", "expected an array");
    for (std::size_t i = 0; i < vs.size(); ++i) {
      l.vectors.push_back(as_bits(vs[i], where + ".vectors[" + std::to_string(i) + "]", false));
    }
  } else {
    bad(where + ".type", "unknown lambda type \"" + t + "\"");
  }
  return l;
}

InputOptions parse_options(const Json& j) {
  InputOptions o;
  if (j.is_null()) return o;
  if (!j.is_object()) bad("options", "expected an object");
  for (const auto& [key, value] : j.items()) {
    const std::string where = "options." + key;
    if (key == "strategy") {
      if (!value.is_string()) bad(where, "expected a string");
      o.strategy = parse_strategy(value.get<std::string>());
    } else if (key == "exponent_cap") {
      o.exponent_cap = as_size(value, where);
    } else if (key == "budget") {
      o.budget = as_size(value, where);
    } else if (key == "assert_rz_simply_connected") {
      if (!value.is_boolean()) bad(where, "expected true or false");
      o.assert_rz_simply_connected = value.get<bool>();
    } else {
      bad(where, "unknown option");
    }
  }
  return o;
}

}  // namespace

InputDocument input_from_json(const Json& j) {
  if (!j.is_object()) bad("document", "expected a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key != "polytope" && key != "lambda" && key != "options") bad("document", "unknown field \"" + key + "\"");
  }
  InputDocument doc;
  doc.polytope = parse_polytope(field(j, "polytope", "document"));
  doc.lambda = parse_lambda(field(j, "lambda", "document"));
  doc.options = parse_options(j.contains("options") ? j["options"] : Json());
  return doc;
}

InputDocument parse_input(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("malformed document: ") + e.what());
  }
  return input_from_json(j);
}

Json input_to_json(const InputDocument& doc) {
  Json out;
  Json p;
  if (doc.polytope.kind == PolytopeSpec::Kind::product_of_simplices) {
    p["type"] = "product_of_simplices";
    p["dims"] = doc.polytope.dims;
  } else {
    p["type"] = "dual_complex";
    p["n"] = doc.polytope.n;
    p["facets"] = doc.polytope.facets;
    p["maximal_simplices"] = doc.polytope.maximal_simplices;
  }
  out["polytope"] = p;

  Json l;
  switch (doc.lambda.kind) {
    case LambdaSpec::Kind::bott_lower: {
      l["type"] = "bott";
      l["dims"] = doc.lambda.dims;
      Json lb = Json::array();
      for (const F2Vector& b : doc.lambda.lower_blocks) {
        if (b.size() == 1) {
          lb.push_back(b.get(0) ? 1 : 0);
        } else {
          lb.push_back(bits_json(b));
        }
      }
      l["lower_blocks"] = lb;
      break;
    }
    case LambdaSpec::Kind::bott_blocks: {
      l["type"] = "bott";
      l["dims"] = doc.lambda.dims;
      Json rows = Json::array();
      for (const auto& row : doc.lambda.blocks) {
        Json r = Json::array();
        for (const F2Vector& b : row) r.push_back(bits_json(b));
        rows.push_back(r);
      }
      l["blocks"] = rows;
      break;
    }
    case LambdaSpec::Kind::explicit_vectors: {
      l["type"] = "explicit";
      l["n"] = doc.lambda.n;
      Json vs = Json::array();
      for (const F2Vector& v : doc.lambda.vectors) vs.push_back(bits_json(v));
      l["vectors"] = vs;
      break;
    }
  }
  out["lambda"] = l;

  Json o = Json::object();
  if (doc.options.strategy) o["strategy"] = std::string(strategy_name(*doc.options.strategy));
  if (doc.options.exponent_cap) o["exponent_cap"] = *doc.options.exponent_cap;
  if (doc.options.budget) o["budget"] = *doc.options.budget;
  if (doc.options.assert_rz_simply_connected) o["assert_rz_simply_connected"] = true;
  if (!o.empty()) out["options"] = o;
  return out;
}

std::string render_input(const InputDocument& doc) { return input_to_json(doc).dump(2) + "\n"; }

ResolvedInput resolve(const InputDocument& doc) {
  std::optional<SimplePolytope> polytope;
  if (doc.polytope.kind == PolytopeSpec::Kind::product_of_simplices) {
    polytope = product_of_simplices(doc.polytope.dims);
  } else {
    std::vector<VertexSet> simplices;
    for (const auto& s : doc.polytope.maximal_simplices) {
      for (std::size_t v : s) {
        if (v >= doc.polytope.facets) {
          throw InvalidInput("polytope.maximal_simplices: facet " + std::to_string(v) + " out of range (facets = " +
                             std::to_string(doc.polytope.facets) + ")");
        }
      }
      if (doc.polytope.facets > VertexSet::kMaxVertices) throw InvalidInput("at most 64 facets are supported");
      simplices.push_back(VertexSet::from_vector(s));
    }
    polytope = SimplePolytope::from_dual(doc.polytope.n,
                                         SimplicialComplex::from_simplices(doc.polytope.facets, simplices));
  }

  ResolvedInput out{*polytope, {}, std::nullopt};
  const LambdaSpec& l = doc.lambda;
  if (l.kind == LambdaSpec::Kind::explicit_vectors) {
    out.lambda = CharacteristicFunction{l.n, l.vectors};
    if (l.n != out.polytope.dim()) {
      throw InvalidInput("lambda.n = " + std::to_string(l.n) + " differs from the polytope dimension " +
                         std::to_string(out.polytope.dim()));
    }
    if (l.vectors.size() != out.polytope.facet_count()) {
      throw InvalidInput("lambda has " + std::to_string(l.vectors.size()) + " vectors but the polytope has " +
                         std::to_string(out.polytope.facet_count()) + " facets");
    }
    for (std::size_t i = 0; i < l.vectors.size(); ++i) {
      if (l.vectors[i].size() != l.n) {
        throw InvalidInput("lambda.vectors[" + std::to_string(i) + "] has length " +
                           std::to_string(l.vectors[i].size()) + ", expected " + std::to_string(l.n));
      }
    }
    return out;
  }

  if (!out.polytope.is_product_of_simplices()) throw InvalidInput("a bott lambda requires a product_of_simplices polytope");
  if (out.polytope.factor_dims() != l.dims) throw InvalidInput("lambda.dims differs from polytope.dims");
  if (l.kind == LambdaSpec::Kind::bott_lower) {
    out.bott = BottMatrix::from_lower_blocks(l.dims, l.lower_blocks);
  } else {
    out.bott = BottMatrix::from_blocks(l.dims, l.blocks);
  }
  out.lambda = bott_to_characteristic(*out.bott);
  return out;
}

// ---------------------------------------------------------------------------
// Reports

Json cohomology_json(const SmallCoverCohomology& c, const SimplePolytope& p, const CohomologyReportOptions& opts) {
  const GradedF2Algebra& a = c.algebra;
  const ReducedPresentation& red = c.reduced;
  Json out;
  out["n"] = red.n;
  out["facets"] = red.r;
  out["variables"] = a.names();

  // x_i in terms of the kept variables.
  std::vector<std::string> facet_names;
  for (std::size_t i = 0; i < red.r; ++i) facet_names.push_back("x" + std::to_string(i + 1));
  Json subst;
  for (std::size_t i = 0; i < red.r; ++i) {
    subst[facet_names[i] + " (" + p.facet_label(i) + ")"] = red.facet_class(i).to_string(a.names());
  }
  out["facet_classes"] = subst;

  Json relations = Json::array();
  for (const Polynomial& g : red.generators) relations.push_back(g.to_string(a.names()));
  out["relations"] = relations;

  const std::size_t last = opts.max_degree ? std::min(*opts.max_degree, a.top_degree()) : a.top_degree();
  std::vector<std::size_t> dims;
  for (std::size_t d = 0; d <= last; ++d) dims.push_back(a.dim(d));
  out["dimensions"] = dims;
  out["total_dimension"] = a.total_dim();
  if (opts.max_degree && *opts.max_degree < a.top_degree()) out["truncated_at_degree"] = *opts.max_degree;

  if (opts.print_basis) {
    Json basis;
    for (std::size_t d = 0; d <= last; ++d) {
      std::vector<std::string> names;
      for (const Monomial& m : a.basis(d)) names.push_back(m.to_string(a.names()));
      basis[std::to_string(d)] = names;
    }
    out["basis"] = basis;
  }

  const FundamentalReport f = fundamental_checks(a, p);
  Json checks;
  checks["top_dimension_one"] = f.top_dimension_one;
  checks["pairing_nondegenerate"] = f.pairing_nondegenerate;
  checks["total_matches_vertices"] = f.total_matches_vertices;
  checks["vertex_count"] = f.vertex_count;
  if (!f.failure.empty()) checks["failure"] = f.failure;
  out["checks"] = checks;
  return out;
}

namespace {

Json provenance_json(const Provenance& p) {
  Json j;
  j["rule"] = p.rule;
  if (!p.certificate.empty()) j["certificate"] = p.certificate;
  if (!p.source.empty()) j["source"] = p.source;
  return j;
}

Json interval_json(const Interval& iv, const Provenance& p) {
  Json j;
  j["lo"] = iv.lo;
  j["hi"] = iv.hi;
  j["exact"] = iv.exact();
  j["provenance"] = provenance_json(p);
  return j;
}

Json zcl_json(const ZclResult& z) {
  Json j;
  j["value"] = z.value;
  j["kind"] = "certified lower bound";
  j["strategy"] = std::string(strategy_name(z.strategy));
  j["certificate"] = z.certificate.render();
  j["witness"] = z.certificate.witness_text;
  j["expansion"] = z.certificate.expansion;
  j["nodes"] = z.nodes;
  j["budget_exhausted"] = z.budget_exhausted;
  return j;
}

}  // namespace

Json bounds_json(const BoundsReport& r) {
  Json out;
  out["n"] = r.n;
  if (r.bott) {
    Json b;
    b["dims"] = r.bott->matrix.dims();
    b["lower_bits"] = r.bott->matrix.lower_bits();
    b["factor_order"] = r.bott->permutation;
    out["bott_normal_form"] = b;
  }
  out["projective_product"] = r.projective_product;

  Json cat;
  cat["value"] = r.cat;
  cat["provenance"] = provenance_json(r.cat_provenance);
  out["cat"] = cat;
  Json cateq;
  cateq["value"] = r.cat_equivariant;
  cateq["provenance"] = provenance_json(r.cat_equivariant_provenance);
  out["cat_equivariant"] = cateq;
  if (r.cat1) {
    Json c1;
    c1["value"] = *r.cat1;
    c1["provenance"] = provenance_json(r.cat1_provenance);
    out["cat1"] = c1;
  } else {
    out["cat1"] = nullptr;
  }

  out["tc"] = interval_json(r.tc, r.tc_provenance);
  if (r.tc_external) {
    Json e;
    e["id"] = r.tc_external->id;
    e["value"] = r.tc_external->value;
    e["source"] = r.tc_external->source;
    e["note"] = r.tc_external->note;
    out["tc_external"] = e;
  } else {
    out["tc_external"] = nullptr;
  }
  out["tcs"] = interval_json(r.tcs, r.tcs_provenance);
  out["tcd"] = interval_json(r.tcd, r.tcd_provenance);
  out["zcl"] = zcl_json(r.zcl);

  Json norm = zcl_json(r.norm.result);
  norm["identified_with_zcl"] = r.norm.identified_with_zcl;
  out["norm_cl"] = norm;

  if (r.case_info) {
    Json c;
    c["cases"] = r.case_info->cases;
    c["bound"] = r.case_info->bound;
    out["two_factor_cases"] = c;
  }
  out["budget_exhausted"] = r.budget_exhausted;
  return out;
}

namespace {

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "none";
  return j.dump();
}

bool all_scalars(const Json& j) {
  for (const auto& e : j) {
    if (e.is_structured()) return false;
  }
  return true;
}

void render(const Json& j, std::size_t indent, std::ostringstream& os) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object() && !value.empty()) {
        os << pad << key << ":\n";
        render(value, indent + 2, os);
      } else if (value.is_array() && !all_scalars(value)) {
        os << pad << key << ":\n";
        render(value, indent + 2, os);
      } else if (value.is_array()) {
        os << pad << key << ": [";
        for (std::size_t i = 0; i < value.size(); ++i) os << (i ? ", " : "") << scalar_text(value[i]);
        os << "]\n";
      } else {
        os << pad << key << ": " << scalar_text(value) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& e : j) {
      if (e.is_structured()) {
        os << pad << "-\n";
        render(e, indent + 2, os);
      } else {
        os << pad << "- " << scalar_text(e) << "\n";
      }
    }
  } else {
    os << pad << scalar_text(j) << "\n";
  }
}

}  // namespace

std::string render_text(const Json& j) {
  std::ostringstream os;
  render(j, 0, os);
  return os.str();
}

}  // namespace smallcover
