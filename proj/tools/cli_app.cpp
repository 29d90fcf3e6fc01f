#include "cli_app.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "vbcm/json_io.hpp"

namespace vbcm {
namespace cli {

namespace {

using io::Json;

struct Ctx {
  std::string field_spec = "q";
  std::string format = "json";
  long long seed = 0;
  std::string in_path = "-";
  std::string out_path;
  std::istream* stdin_stream = nullptr;

  Field field() const { return Field::parse_name(field_spec); }

  std::string read_input() const {
    if (in_path == "-") {
      std::ostringstream ss;
      ss << stdin_stream->rdbuf();
      return ss.str();
    }
    std::ifstream f(in_path);
    if (!f) fail(errc::invalid_argument, "cannot open input file: " + in_path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
  }

  Json input_json() const { return io::parse(read_input()); }
};

void add_global_options(CLI::App& app, Ctx& ctx) {
  app.add_option("--field", ctx.field_spec, "Coefficient field: q or fp:<prime>")
      ->envname("VBCM_FIELD")
      ->capture_default_str();
  app.add_option("--format", ctx.format, "Output format: json, csv or markdown")
      ->envname("VBCM_FORMAT")
      ->check(CLI::IsMember({"json", "csv", "markdown"}))
      ->capture_default_str();
  app.add_option("--seed", ctx.seed, "Seed for reproducible sampling")
      ->envname("VBCM_SEED")
      ->capture_default_str();
  app.add_option("--in", ctx.in_path, "Input JSON file, - for stdin")->capture_default_str();
  app.add_option("--out", ctx.out_path, "Write output to a file instead of stdout");
}

// Tabular rendering of descriptor-like rows for the csv and markdown formats.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string render_csv(const Table& t) {
  std::string out = join(t.header, ",") + "\n";
  for (const auto& row : t.rows) out += join(row, ",") + "\n";
  return out;
}

std::string render_markdown(const Table& t) {
  std::string out = "| " + join(t.header, " | ") + " |\n|";
  for (std::size_t i = 0; i < t.header.size(); ++i) out += " --- |";
  out += "\n";
  for (const auto& row : t.rows) out += "| " + join(row, " | ") + " |\n";
  return out;
}

std::string ints_joined(const Json& arr) {
  std::vector<std::string> parts;
  for (const auto& v : arr) parts.push_back(v.dump());
  return join(parts, " ");
}

std::vector<std::string> descriptor_row(const Json& d, long long rank) {
  std::vector<std::string> row;
  row.push_back(std::to_string(rank));
  row.push_back(d.contains("variant") ? d["variant"].get<std::string>()
                                      : d["family"].get<std::string>());
  row.push_back(d.contains("d") ? ints_joined(d["d"]) : "");
  row.push_back(d.contains("m") ? d["m"].dump() : "");
  std::string lam;
  if (d.contains("lambda")) lam = d["lambda"].get<std::string>();
  row.push_back(lam);
  std::string ex;
  if (d.contains("lambda_excluded")) {
    std::vector<std::string> parts;
    for (const auto& v : d["lambda_excluded"]) parts.push_back(v.get<std::string>());
    ex = join(parts, " ");
  }
  row.push_back(ex);
  return row;
}

// Emits a JSON value (default) or a descriptor table (csv/markdown).
void emit(const Ctx& ctx, std::ostream& out, const Json& value, const Table* table = nullptr) {
  std::ofstream file;
  std::ostream* dst = &out;
  if (!ctx.out_path.empty()) {
    file.open(ctx.out_path);
    if (!file) fail(errc::invalid_argument, "cannot open output file: " + ctx.out_path);
    dst = &file;
  }
  if (table && ctx.format == "csv")
    *dst << render_csv(*table);
  else if (table && ctx.format == "markdown")
    *dst << render_markdown(*table);
  else
    *dst << value.dump(2) << "\n";
}

laurent::LaurentMatrix read_laurent_matrix(const Ctx& ctx) {
  return io::laurent_matrix_from_json(ctx.input_json(), ctx.field());
}

cmmod::CuspSingularity cusp_from_json(const Json& j) {
  cmmod::CuspSingularity sing;
  if (!j.contains("s") || !j.contains("b"))
    fail(errc::invalid_argument, "cusp singularity needs s and b");
  sing.s = j["s"].get<int>();
  for (const auto& v : j["b"]) sing.b.push_back(v.get<long long>());
  return sing;
}

cmmod::QCuspData qcusp_from_json(const Json& j) {
  cmmod::QCuspData data;
  if (!j.contains("t") || !j.contains("b"))
    fail(errc::invalid_argument, "Q-cusp data needs t and b");
  data.t = j["t"].get<int>();
  for (const auto& v : j["b"]) data.b.push_back(v.get<long long>());
  return data;
}

Json catalog_for_target(const Ctx& ctx, const Json& req, long long rank, Table& table) {
  std::string target = req["target"].get<std::string>();
  Json modules = Json::array();
  if (target == "cusp") {
    auto sing = cusp_from_json(req);
    for (const auto& d : cmmod::enumerate_cm_cusp(sing, rank)) {
      Json dj = io::to_json(d);
      table.rows.push_back(descriptor_row(dj, rank));
      modules.push_back(std::move(dj));
    }
  } else if (target == "elliptic") {
    cmmod::SimpleEllipticSingularity sing;
    if (!req.contains("b")) fail(errc::invalid_argument, "elliptic singularity needs b");
    sing.b = req["b"].get<long long>();
    for (const auto& d : cmmod::enumerate_cm_elliptic(sing, rank)) {
      Json dj = io::to_json(d);
      table.rows.push_back(descriptor_row(dj, rank));
      modules.push_back(std::move(dj));
    }
  } else if (target == "qcusp") {
    auto data = qcusp_from_json(req);
    for (const auto& d : cmmod::enumerate_cm_qcusp(data, rank)) {
      Json dj = io::to_json(d);
      table.rows.push_back(descriptor_row(dj, rank));
      modules.push_back(std::move(dj));
    }
  } else {
    fail(errc::invalid_argument, "catalog target must be cusp, elliptic or qcusp");
  }
  return modules;
}

int dispatch(CLI::App& app, const Ctx& ctx, std::ostream& out) {
  Field f = ctx.field();

  if (auto* p1 = app.get_subcommand("p1"); p1->parsed()) {
    if (p1->get_subcommand("split")->parsed()) {
      auto res = laurent::diagonalize(read_laurent_matrix(ctx));
      emit(ctx, out, Json(res.degrees));
      return 0;
    }
    if (auto* sec = p1->get_subcommand("sections"); sec->parsed()) {
      long long twist = sec->get_option("--twist")->as<long long>();
      emit(ctx, out, Json(laurent::section_dim_oracle(read_laurent_matrix(ctx), twist)));
      return 0;
    }
  }

  if (auto* ch = app.get_subcommand("chain"); ch->parsed()) {
    if (ch->get_subcommand("classify")->parsed()) {
      auto res = chain::reduce_chain(io::chain_from_json(ctx.input_json(), f));
      Json j;
      j["bundles"] = res.bundles;
      j["transformed"] = io::to_json(res.transformed);
      emit(ctx, out, j);
      return 0;
    }
    if (ch->get_subcommand("tf-classify")->parsed()) {
      Json arr = Json::array();
      for (const auto& iv : chain::decompose_torsion_free(io::chain_from_json(ctx.input_json(), f)))
        arr.push_back(io::to_json(iv));
      emit(ctx, out, arr);
      return 0;
    }
  }

  if (auto* bd = app.get_subcommand("band"); bd->parsed()) {
    if (bd->get_subcommand("canon")->parsed()) {
      emit(ctx, out, io::to_json(band::canonical_form(io::band_from_json(ctx.input_json(), f))));
      return 0;
    }
    if (bd->get_subcommand("iso")->parsed()) {
      Json j = ctx.input_json();
      if (!j.contains("first") || !j.contains("second"))
        fail(errc::invalid_argument, "iso needs {\"first\":, \"second\":}");
      bool iso = band::are_isomorphic(io::band_from_json(j["first"], f),
                                      io::band_from_json(j["second"], f));
      emit(ctx, out, Json(iso));
      return 0;
    }
    if (bd->get_subcommand("enum")->parsed() || bd->get_subcommand("nu")->parsed()) {
      Json j = ctx.input_json();
      if (!j.contains("s") || !j.contains("r") || !j.contains("delta"))
        fail(errc::invalid_argument, "enumeration needs {\"s\":, \"r\":, \"delta\":}");
      int s = j["s"].get<int>();
      int r = j["r"].get<int>();
      std::vector<long long> delta;
      for (const auto& v : j["delta"]) delta.push_back(v.get<long long>());
      if (bd->get_subcommand("nu")->parsed())
        emit(ctx, out, Json(band::nu_count(s, r, delta)));
      else
        emit(ctx, out, Json(band::enumerate_nonneg(s, r, delta)));
      return 0;
    }
    if (bd->get_subcommand("glue")->parsed()) {
      emit(ctx, out, io::to_json(band::build_gluing(io::band_from_json(ctx.input_json(), f))));
      return 0;
    }
    if (bd->get_subcommand("cut")->parsed()) {
      emit(ctx, out, io::to_json(band::cut_cycle(io::band_from_json(ctx.input_json(), f))));
      return 0;
    }
    if (bd->get_subcommand("curve-type")->parsed()) {
      auto t = band::curve_vb_type(io::graph_from_json(ctx.input_json()));
      emit(ctx, out, Json(band::to_string(t)));
      return 0;
    }
    if (bd->get_subcommand("cohom")->parsed()) {
      emit(ctx, out, io::to_json(cohom::cohomology(io::band_from_json(ctx.input_json(), f))));
      return 0;
    }
  }

  if (auto* co = app.get_subcommand("cohom"); co->parsed()) {
    if (co->get_subcommand("dims")->parsed()) {
      emit(ctx, out, io::to_json(cohom::cohomology(io::band_from_json(ctx.input_json(), f))));
      return 0;
    }
    if (co->get_subcommand("suitable")->parsed()) {
      Json j = ctx.input_json();
      if (!j.contains("d")) fail(errc::invalid_argument, "suitable needs {\"d\": [...]}");
      std::vector<long long> d;
      for (const auto& v : j["d"]) d.push_back(v.get<long long>());
      emit(ctx, out, Json(cohom::is_suitable(d)));
      return 0;
    }
    if (co->get_subcommand("spanned")->parsed()) {
      emit(ctx, out,
           Json(cohom::is_generically_spanned(io::band_from_json(ctx.input_json(), f))));
      return 0;
    }
    if (co->get_subcommand("atiyah")->parsed()) {
      Json j = ctx.input_json();
      for (const char* k : {"r", "d", "n"})
        if (!j.contains(k)) fail(errc::invalid_argument, "atiyah needs r, d, n, at_origin");
      bool at_origin = j.value("at_origin", false);
      emit(ctx, out,
           io::to_json(cohom::atiyah_cohom(j["r"].get<long long>(), j["d"].get<long long>(),
                                           j["n"].get<long long>(), at_origin)));
      return 0;
    }
  }

  if (auto* cm = app.get_subcommand("cm"); cm->parsed()) {
    if (cm->get_subcommand("nd")->parsed()) {
      Json j = ctx.input_json();
      auto sing = cusp_from_json(j);
      if (!j.contains("d")) fail(errc::invalid_argument, "nd needs d");
      std::vector<long long> d;
      for (const auto& v : j["d"]) d.push_back(v.get<long long>());
      emit(ctx, out, Json(cmmod::n_d(d, sing)));
      return 0;
    }
    if (auto* ce = cm->get_subcommand("cusp-enum"); ce->parsed()) {
      Json j = ctx.input_json();
      auto sing = cusp_from_json(j);
      if (!j.contains("rank")) fail(errc::invalid_argument, "cusp-enum needs rank");
      std::optional<FieldElem> sample;
      auto* opt = ce->get_option("--sample-lambda");
      if (opt->count() > 0) sample = f.parse(opt->as<std::string>());
      Json arr = Json::array();
      Table table{{"rank", "variant", "d", "m", "lambda", "lambda_excluded"}, {}};
      long long rank = j["rank"].get<long long>();
      for (const auto& d : cmmod::enumerate_cm_cusp(sing, rank, sample)) {
        Json dj = io::to_json(d);
        table.rows.push_back(descriptor_row(dj, rank));
        arr.push_back(std::move(dj));
      }
      emit(ctx, out, arr, &table);
      return 0;
    }
    if (cm->get_subcommand("elliptic-enum")->parsed()) {
      Json j = ctx.input_json();
      cmmod::SimpleEllipticSingularity sing;
      if (!j.contains("b") || !j.contains("rank"))
        fail(errc::invalid_argument, "elliptic-enum needs b and rank");
      sing.b = j["b"].get<long long>();
      Json arr = Json::array();
      Table table{{"rank", "variant", "d", "m", "lambda", "lambda_excluded"}, {}};
      long long rank = j["rank"].get<long long>();
      for (const auto& d : cmmod::enumerate_cm_elliptic(sing, rank)) {
        Json dj = io::to_json(d);
        table.rows.push_back(descriptor_row(dj, rank));
        arr.push_back(std::move(dj));
      }
      emit(ctx, out, arr, &table);
      return 0;
    }
    if (cm->get_subcommand("qcusp-enum")->parsed()) {
      Json j = ctx.input_json();
      auto data = qcusp_from_json(j);
      if (!j.contains("rank")) fail(errc::invalid_argument, "qcusp-enum needs rank");
      Json arr = Json::array();
      Table table{{"rank", "family", "d", "m", "lambda", "lambda_excluded"}, {}};
      long long rank = j["rank"].get<long long>();
      for (const auto& d : cmmod::enumerate_cm_qcusp(data, rank)) {
        Json dj = io::to_json(d);
        table.rows.push_back(descriptor_row(dj, rank));
        arr.push_back(std::move(dj));
      }
      emit(ctx, out, arr, &table);
      return 0;
    }
    if (cm->get_subcommand("sigma")->parsed()) {
      Json j = ctx.input_json();
      for (const char* k : {"d", "m", "lambda", "t"})
        if (!j.contains(k)) fail(errc::invalid_argument, "sigma needs d, m, lambda, t");
      std::vector<long long> d;
      for (const auto& v : j["d"]) d.push_back(v.get<long long>());
      auto res = cmmod::sigma_act(d, j["m"].get<int>(), f.parse(j["lambda"].get<std::string>()),
                                  j["t"].get<int>());
      Json outj;
      outj["d"] = res.d;
      outj["m"] = res.m;
      outj["lambda"] = res.lambda.to_string();
      emit(ctx, out, outj);
      return 0;
    }
  }

  if (auto* wd = app.get_subcommand("wild"); wd->parsed()) {
    if (wd->get_subcommand("embed")->parsed()) {
      Json j = ctx.input_json();
      auto mp = io::module_from_json(j, f);
      wild::Sigma2Module emb;
      if (j.contains("lambdas")) {
        std::vector<FieldElem> lambdas;
        for (const auto& v : j["lambdas"]) lambdas.push_back(f.parse(v.get<std::string>()));
        emb = wild::embed_sigma2(mp, lambdas);
      } else {
        emb = wild::embed_sigma2(mp);
      }
      emit(ctx, out, io::to_json(emb));
      return 0;
    }
    if (auto* hd = wd->get_subcommand("homdim"); hd->parsed()) {
      Json j = ctx.input_json();
      if (!j.contains("first") || !j.contains("second"))
        fail(errc::invalid_argument, "homdim needs {\"first\":, \"second\":}");
      long long dim;
      if (hd->get_option("--sigma2")->as<bool>())
        dim = wild::hom_dim_sigma2(io::sigma2_from_json(j["first"], f),
                                   io::sigma2_from_json(j["second"], f));
      else
        dim = wild::hom_dim(io::module_from_json(j["first"], f),
                            io::module_from_json(j["second"], f));
      emit(ctx, out, Json(dim));
      return 0;
    }
    if (auto* wi = wd->get_subcommand("witness"); wi->parsed()) {
      auto kind = wild::witness_kind_from_string(wi->get_option("--kind")->as<std::string>());
      std::vector<FieldElem> params;
      for (const auto& zs : wi->get_option("--z")->results()) params.push_back(f.parse(zs));
      std::optional<int> block;
      if (wi->get_option("--n")->count() > 0) block = wi->get_option("--n")->as<int>();
      emit(ctx, out, io::to_json(wild::witness(kind, params, f, block)));
      return 0;
    }
  }

  if (auto* cat = app.get_subcommand("catalog"); cat->parsed()) {
    Json req = ctx.input_json();
    for (const char* k : {"target", "rank_min", "rank_max"})
      if (!req.contains(k)) fail(errc::invalid_argument, "catalog needs target, rank_min, rank_max");
    long long lo = req["rank_min"].get<long long>();
    long long hi = req["rank_max"].get<long long>();
    if (lo < 1 || hi < lo) fail(errc::invalid_argument, "catalog rank range must be nonempty, >= 1");
    std::string target = req["target"].get<std::string>();
    Table table{{"rank", target == "qcusp" ? "family" : "variant", "d", "m", "lambda",
                 "lambda_excluded"},
                {}};
    Json rows = Json::array();
    for (long long rank = lo; rank <= hi; ++rank) {
      Json row;
      row["rank"] = rank;
      row["modules"] = catalog_for_target(ctx, req, rank, table);
      rows.push_back(std::move(row));
    }
    Json j;
    j["target"] = target;
    j["rows"] = std::move(rows);
    emit(ctx, out, j, &table);
    return 0;
  }

  fail(errc::invalid_argument, "no subcommand given");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact toolkit for vector bundles on degenerate curves and "
               "Cohen-Macaulay modules over surface singularities"};
  app.require_subcommand(0, 1);
  Ctx ctx;
  ctx.stdin_stream = &in;
  add_global_options(app, ctx);

  auto* p1 = app.add_subcommand("p1", "Bundles on the projective line");
  p1->require_subcommand(1);
  p1->add_subcommand("split", "Splitting type via Laurent diagonalization");
  auto* sections = p1->add_subcommand("sections", "Section dimension oracle");
  sections->add_option("--twist", "Twist (defaults to 0)")->default_val("0");

  auto* ch = app.add_subcommand("chain", "Sheaves on chains of projective lines");
  ch->require_subcommand(1);
  ch->add_subcommand("classify", "Decompose a vector bundle into line bundles");
  ch->add_subcommand("tf-classify", "Decompose torsion-free data into interval bundles");

  auto* bd = app.add_subcommand("band", "Bundles on cycles of projective lines");
  bd->require_subcommand(1);
  bd->add_subcommand("canon", "Canonical form of a band datum");
  bd->add_subcommand("iso", "Isomorphism test for band data");
  bd->add_subcommand("enum", "Enumerate band sequences by rank and degree");
  bd->add_subcommand("nu", "Count band sequences by rank and degree");
  bd->add_subcommand("glue", "Identification data of the band bundle");
  bd->add_subcommand("cut", "Cut the closing identification; chain data of the result");
  bd->add_subcommand("curve-type", "Representation type from the dual graph");
  bd->add_subcommand("cohom", "Cohomology of the band bundle");

  auto* co = app.add_subcommand("cohom", "Cohomology on degenerate curves");
  co->require_subcommand(1);
  co->add_subcommand("dims", "Cohomology of a band bundle");
  co->add_subcommand("suitable", "Suitability test for a sequence");
  co->add_subcommand("spanned", "Generic spannedness of a band bundle");
  co->add_subcommand("atiyah", "Cohomology table on a smooth elliptic curve");

  auto* cm = app.add_subcommand("cm", "Cohen-Macaulay module enumeration");
  cm->require_subcommand(1);
  auto* ce = cm->add_subcommand("cusp-enum", "Indecomposables over a cusp singularity");
  ce->add_option("--sample-lambda", "Instantiate one module per family at this parameter");
  cm->add_subcommand("elliptic-enum", "Indecomposables over a simple elliptic singularity");
  cm->add_subcommand("qcusp-enum", "Indecomposables over a Q-cusp quotient");
  cm->add_subcommand("nd", "The combinatorial count n_d");
  cm->add_subcommand("sigma", "Involution on band data");

  auto* wd = app.add_subcommand("wild", "Wildness gadgets");
  wd->require_subcommand(1);
  wd->add_subcommand("embed", "Embed a module presentation into two generators");
  auto* hd = wd->add_subcommand("homdim", "Dimension of the intertwiner space");
  hd->add_flag("--sigma2", "Inputs are two-generator modules");
  auto* wi = wd->add_subcommand("witness", "Strict-family witness matrices");
  wi->add_option("--kind", "genus, step71, step72, step73 or step74")->required();
  wi->add_option("--z", "Substitution value (repeatable)")->take_all();
  wi->add_option("--n", "Block size for the genus witness");

  app.add_subcommand("catalog", "Rank-indexed module tables");

  std::vector<char*> argv;
  std::vector<std::string> storage;
  storage.push_back("vbcm");
  for (const auto& a : args) storage.push_back(a);
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    err << app.help();
    return 1;
  }

  try {
    if (app.get_subcommands().empty()) {
      err << app.help();
      return 1;
    }
    return dispatch(app, ctx, out);
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return is_validation_error(e.code()) ? 2 : 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace cli
}  // namespace vbcm
