#include "chevalley/serialize.hpp"

#include <fstream>

#include "chevalley/adjoint.hpp"

namespace chevalley {

CartanMatrix cartan_from_json(const Json& doc) {
  const Json& m = (doc.is_object() && doc.contains("cartan")) ? doc.at("cartan") : doc;
  if (!m.is_array()) throw UsageError("Cartan matrix must be a JSON array of integer rows");
  std::vector<std::vector<long>> rows;
  for (const Json& row : m) {
    if (!row.is_array()) throw UsageError("Cartan matrix rows must be arrays");
    std::vector<long> r;
    for (const Json& x : row) {
      if (!x.is_number_integer()) throw UsageError("Cartan matrix entries must be integers");
      r.push_back(x.get<long>());
    }
    rows.push_back(std::move(r));
  }
  return CartanMatrix::from_entries(rows);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw UsageError(path + " is not valid JSON: " + e.what());
  }
}

Json root_system_to_json(const RootSystem& rs, bool with_pairings) {
  const auto [type, rank] = identify_type(rs);
  Json doc;
  doc["type"] = std::string(1, type) + std::to_string(rank);
  doc["cartan"] = rs.cartan().rows();
  doc["symmetrizer"] = rs.cartan().symmetrizer();
  Json roots = Json::array();
  for (const Root& r : rs.roots()) roots.push_back({{"coords", r.coords}, {"height", r.height()}});
  doc["roots"] = roots;
  if (with_pairings) {
    Json p = Json::array();
    for (const Root& b : rs.roots()) {
      Json row = Json::array();
      for (const Root& a : rs.roots()) row.push_back(rs.pairing(b, a));
      p.push_back(row);
    }
    doc["pairings"] = p;
  }
  return doc;
}

RootSystem root_system_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("cartan")) throw UsageError("root system JSON needs a cartan member");
  RootSystem rs(cartan_from_json(doc.at("cartan")));
  if (doc.contains("roots")) {
    const Json& roots = doc.at("roots");
    bool ok = roots.is_array() && roots.size() == rs.size();
    for (std::size_t k = 0; ok && k < rs.size(); ++k) {
      ok = roots[k].contains("coords") && roots[k].at("coords").get<std::vector<int>>() == rs.root(k).coords;
    }
    if (!ok) throw UsageError("listed roots do not match the Cartan matrix");
  }
  return rs;
}

Json matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).get_str());
    rows.push_back(row);
  }
  return rows;
}

IntMatrix int_matrix_from_json(const Json& doc) {
  if (!doc.is_array()) throw UsageError("matrix must be an array of rows");
  const std::size_t rows = doc.size();
  const std::size_t cols = rows ? doc[0].size() : 0;
  IntMatrix m(rows, cols, Integer(0));
  for (std::size_t r = 0; r < rows; ++r) {
    if (!doc[r].is_array() || doc[r].size() != cols) throw UsageError("ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) {
      const Json& x = doc[r][c];
      try {
        if (x.is_string()) {
          m(r, c) = Integer(x.get<std::string>());
        } else if (x.is_number_integer()) {
          m(r, c) = Integer(x.get<long>());
        } else {
          throw UsageError("matrix entries must be decimal strings or integers");
        }
      } catch (const std::invalid_argument&) {
        throw UsageError("bad integer '" + x.get<std::string>() + "'");
      }
    }
  }
  return m;
}

Json model_matrix_to_json(const RootSystem& rs, const IntMatrix& m) {
  return {{"legend", ModelBasis(rs).legend(rs)}, {"matrix", matrix_to_json(m)}};
}

ConstantsDocument constants_document(const RootSystem& rs, const ChevalleyBasis& basis) {
  ConstantsDocument doc{basis.epsilon(), structure_constants(rs, basis), {}};
  for (std::size_t k = 0; k < rs.size(); ++k) doc.basis.push_back(basis.e(k));
  return doc;
}

Json constants_to_json(const RootSystem& rs, const ConstantsDocument& doc, bool with_basis) {
  Json out;
  out["epsilon"] = doc.epsilon.values;
  Json constants = Json::array();
  for (const auto& [key, n] : doc.table.entries) {
    constants.push_back({{"alpha", rs.root(key.first).coords}, {"beta", rs.root(key.second).coords}, {"n", n.get_str()}});
  }
  out["constants"] = constants;
  if (with_basis) {
    Json b = Json::object();
    for (std::size_t k = 0; k < doc.basis.size(); ++k) b[rs.root(k).to_string()] = matrix_to_json(doc.basis[k]);
    out["basis"] = b;
  }
  return out;
}

ConstantsDocument constants_from_json(const RootSystem& rs, const Json& doc) {
  ConstantsDocument out;
  try {
    out.epsilon.values = doc.at("epsilon").get<std::vector<int>>();
    for (const Json& c : doc.at("constants")) {
      const std::size_t a = rs.index_of(Root{c.at("alpha").get<std::vector<int>>()});
      const std::size_t b = rs.index_of(Root{c.at("beta").get<std::vector<int>>()});
      out.table.entries[{a, b}] = Integer(c.at("n").get<std::string>());
    }
    if (doc.contains("basis")) {
      out.basis.resize(rs.size());
      for (std::size_t k = 0; k < rs.size(); ++k) out.basis[k] = int_matrix_from_json(doc.at("basis").at(rs.root(k).to_string()));
    }
  } catch (const Json::exception& e) {
    throw UsageError(std::string("malformed constants document: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw UsageError("malformed constants document: bad integer");
  }
  return out;
}

Json closure_report_to_json(const RootSystem& rs, const LieClosure& g, const RootSpaceDecomposition& dec,
                            const TriangularReport& tri) {
  const auto [type, rank] = identify_type(rs);
  Json out;
  out["type"] = std::string(1, type) + std::to_string(rank);
  out["rank"] = rs.rank();
  out["num_roots"] = rs.size();
  out["dimension"] = g.dimension();
  out["expected_dimension"] = rs.size() + rs.rank();
  Json weights = Json::array();
  for (const auto& [w, space] : dec.spaces) {
    const auto k = root_of_weight(rs, w);
    Json entry{{"weight", w}, {"dimension", space.dimension()}};
    entry["root"] = k ? Json(rs.root(*k).coords) : Json(nullptr);
    weights.push_back(entry);
  }
  out["weights"] = weights;
  out["triangular"] = {{"dim_n_plus", tri.dim_n_plus},
                       {"dim_h", tri.dim_h},
                       {"dim_n_minus", tri.dim_n_minus},
                       {"n_plus_strictly_upper", tri.n_plus_strictly_upper},
                       {"n_minus_strictly_lower", tri.n_minus_strictly_lower},
                       {"traceless", tri.traceless},
                       {"direct_sum", tri.direct_sum},
                       {"passed", tri.passed()}};
  return out;
}

}  // namespace chevalley
