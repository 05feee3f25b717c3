//------------------------------- -*- C++ -*- -------------------------------//
// Copyright nestmc contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file nestmc/harness/ModelIO.cc
//---------------------------------------------------------------------------//
#include "ModelIO.hh"

#include <fstream>
#include <map>

#include "nestmc/arrays/PseudoArray.hh"

namespace nestmc
{
namespace
{
using nlohmann::json;

//---------------------------------------------------------------------------//
json const& require(json const& obj, char const* key, std::string const& where)
{
    NMC_VALIDATE(obj.is_object() && obj.contains(key),
                 ConfigError,
                 << where << ": missing required key '" << key << "'");
    return obj.at(key);
}

template<class T>
T get_as(json const& obj, char const* key, std::string const& where)
{
    json const& v = require(obj, key, where);
    try
    {
        return v.get<T>();
    }
    catch (json::exception const& e)
    {
        NMC_VALIDATE(false,
                     ConfigError,
                     << where << ": key '" << key
                     << "' has the wrong type: " << e.what());
    }
    return T{};
}

template<class T>
T get_or(json const& obj, char const* key, T fallback, std::string const& where)
{
    if (!obj.contains(key))
    {
        return fallback;
    }
    return get_as<T>(obj, key, where);
}

Real3 get_real3(json const& obj, char const* key, std::string const& where)
{
    auto v = get_as<std::vector<real_type>>(obj, key, where);
    NMC_VALIDATE(v.size() == 3,
                 ConfigError,
                 << where << ": '" << key << "' must have 3 components");
    return {v[0], v[1], v[2]};
}

//---------------------------------------------------------------------------//
Surface parse_surface(json const& s, std::string const& where)
{
    auto const type = get_as<std::string>(s, "type", where);
    Surface result;
    if (type == "plane_x")
    {
        result = PlaneX{get_as<real_type>(s, "x", where)};
    }
    else if (type == "plane_y")
    {
        result = PlaneY{get_as<real_type>(s, "y", where)};
    }
    else if (type == "plane_z")
    {
        result = PlaneZ{get_as<real_type>(s, "z", where)};
    }
    else if (type == "plane")
    {
        result = GeneralPlane{get_real3(s, "normal", where),
                              get_as<real_type>(s, "d", where)};
    }
    else if (type == "cylinder_z")
    {
        result = CylinderZ{get_or<real_type>(s, "x0", 0, where),
                           get_or<real_type>(s, "y0", 0, where),
                           get_as<real_type>(s, "r", where)};
    }
    else if (type == "sphere")
    {
        result = Sphere{get_real3(s, "center", where),
                        get_as<real_type>(s, "r", where)};
    }
    else
    {
        NMC_VALIDATE(false,
                     ConfigError,
                     << where << ": unknown surface type '" << type << "'");
    }
    try
    {
        validate_surface(result);
    }
    catch (std::exception const& e)
    {
        NMC_VALIDATE(false, ConfigError, << where << ": " << e.what());
    }
    return result;
}

//---------------------------------------------------------------------------//
enum class Placement
{
    center,
    none
};

Placement parse_placement(json const& a, std::string const& where)
{
    auto p = get_or<std::string>(a, "placement", "center", where);
    if (p == "center")
    {
        return Placement::center;
    }
    NMC_VALIDATE(p == "none",
                 ConfigError,
                 << where << ": placement must be 'center' or 'none'");
    return Placement::none;
}

std::vector<std::string>
parse_fill(json const& a, size_type count, std::string const& where)
{
    json const& f = require(a, "fill", where);
    if (f.is_string())
    {
        return std::vector<std::string>(count, f.get<std::string>());
    }
    auto names = get_as<std::vector<std::string>>(a, "fill", where);
    NMC_VALIDATE(names.size() == count,
                 ConfigError,
                 << where << ": fill has " << names.size()
                 << " entries but the array has " << count << " cells");
    return names;
}

BoundaryCondition parse_bc(std::string const& s, std::string const& where)
{
    if (s == "vacuum")
    {
        return BoundaryCondition::vacuum;
    }
    NMC_VALIDATE(s == "reflecting",
                 ConfigError,
                 << where << ": boundary must be 'vacuum' or 'reflecting'");
    return BoundaryCondition::reflecting;
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
json read_json_file(std::string const& path)
{
    std::ifstream in(path);
    NMC_VALIDATE(in, ConfigError, << "cannot open model file '" << path << "'");
    try
    {
        return json::parse(in);
    }
    catch (json::exception const& e)
    {
        NMC_VALIDATE(false,
                     ConfigError,
                     << "failed to parse '" << path << "': " << e.what());
    }
    return {};
}

void write_json_file(std::string const& path, json const& doc)
{
    std::ofstream out(path);
    NMC_VALIDATE(out, ConfigError, << "cannot write '" << path << "'");
    out << doc.dump(1) << '\n';
}

ModelInput load_model(std::string const& path)
{
    return parse_model(read_json_file(path));
}

//---------------------------------------------------------------------------//
RunSettings parse_run(json const& run)
{
    std::string const where = "run";
    RunSettings result;
    auto& t = result.transport;
    if (run.is_null())
    {
        return result;
    }
    NMC_VALIDATE(run.is_object(), ConfigError, << "run section must be an object");
    t.histories = get_or<size_type>(run, "histories", t.histories, where);
    t.inactive = get_or<size_type>(run, "inactive", t.inactive, where);
    t.active = get_or<size_type>(run, "active", t.active, where);
    t.seed = get_or<std::uint64_t>(run, "seed", t.seed, where);
    t.workers = get_or<size_type>(run, "workers", t.workers, where);
    t.max_events = get_or<size_type>(run, "max_events", t.max_events, where);
    if (run.contains("driver"))
    {
        t.driver = driver_from_string(get_as<std::string>(run, "driver", where));
    }
    if (run.contains("strategy"))
    {
        result.strategy
            = strategy_from_string(get_as<std::string>(run, "strategy", where));
    }
    if (run.contains("source_box"))
    {
        auto const& sb = run.at("source_box");
        t.source_box = Aabb{get_real3(sb, "lo", "run.source_box"),
                            get_real3(sb, "hi", "run.source_box")};
    }
    if (run.contains("mesh"))
    {
        auto const& m = run.at("mesh");
        auto dims = get_as<std::vector<size_type>>(m, "dims", "run.mesh");
        NMC_VALIDATE(dims.size() == 3,
                     ConfigError,
                     << "run.mesh: 'dims' must have 3 entries");
        t.mesh = MeshSpec{Aabb{get_real3(m, "lo", "run.mesh"),
                               get_real3(m, "hi", "run.mesh")},
                          Ijk{dims[0], dims[1], dims[2]}};
    }
    NMC_VALIDATE(t.histories >= 1, ConfigError, << "run: histories must be >= 1");
    NMC_VALIDATE(t.active >= 1, ConfigError, << "run: active must be >= 1");
    NMC_VALIDATE(t.workers >= 1, ConfigError, << "run: workers must be >= 1");
    return result;
}

json to_json(RunSettings const& run)
{
    auto const& t = run.transport;
    json j = {{"histories", t.histories},
              {"inactive", t.inactive},
              {"active", t.active},
              {"seed", t.seed},
              {"strategy", to_cstring(run.strategy)},
              {"driver", to_cstring(t.driver)},
              {"workers", t.workers}};
    if (t.source_box)
    {
        j["source_box"] = {{"lo", t.source_box->lo}, {"hi", t.source_box->hi}};
    }
    if (t.mesh)
    {
        j["mesh"] = {{"lo", t.mesh->box.lo},
                     {"hi", t.mesh->box.hi},
                     {"dims", t.mesh->dims}};
    }
    return j;
}

//---------------------------------------------------------------------------//
/*!
 * Parse a model document.
 *
 * Universe IDs are assigned to the \c universes (CSG) entries in order, then
 * to the \c arrays entries. Fill names refer to an embedding or, failing
 * that, to a universe placed without extra translation.
 */
ModelInput parse_model(json const& doc)
{
    NMC_VALIDATE(doc.is_object(), ConfigError, << "model must be a JSON object");
    ModelInput result;
    result.name = get_or<std::string>(doc, "name", "model", "model");

    // Materials
    std::map<std::string, MaterialId> mat_ids;
    for (auto const& m : require(doc, "materials", "model"))
    {
        MaterialInput mi;
        mi.name = get_as<std::string>(m, "name", "material");
        std::string const where = "material '" + mi.name + "'";
        mi.nu = get_or<real_type>(m, "nu", mi.nu, where);
        mi.sigma_t = get_as<std::vector<real_type>>(m, "sigma_t", where);
        mi.sigma_s
            = get_as<std::vector<std::vector<real_type>>>(m, "sigma_s", where);
        mi.nu_sigma_f = get_or<std::vector<real_type>>(
            m, "nu_sigma_f", std::vector<real_type>(mi.sigma_t.size(), 0), where);
        mi.chi = get_or<std::vector<real_type>>(
            m, "chi", std::vector<real_type>(mi.sigma_t.size(), 0), where);
        if (!mi.chi.empty())
        {
            real_type sum = 0;
            for (auto c : mi.chi)
            {
                sum += c;
            }
            if (sum == 0)
            {
                mi.chi[0] = 1;
            }
        }
        NMC_VALIDATE(mat_ids.emplace(mi.name, MaterialId(mat_ids.size())).second,
                     ConfigError,
                     << "duplicate material name '" << mi.name << "'");
        result.materials.push_back(std::move(mi));
    }

    // Surfaces
    std::map<std::string, Surface> surfaces;
    if (doc.contains("surfaces"))
    {
        for (auto const& s : doc.at("surfaces"))
        {
            auto name = get_as<std::string>(s, "name", "surface");
            NMC_VALIDATE(surfaces.emplace(name, parse_surface(s, "surface '" + name + "'"))
                             .second,
                         ConfigError,
                         << "duplicate surface name '" << name << "'");
        }
    }

    // Universe names
    json const empty = json::array();
    json const& csg_defs = doc.contains("universes") ? doc.at("universes") : empty;
    json const& array_defs = doc.contains("arrays") ? doc.at("arrays") : empty;
    std::map<std::string, UniverseId> uids;
    auto& labels = result.geometry.labels;
    for (json const* defs : {&csg_defs, &array_defs})
    {
        for (auto const& u : *defs)
        {
            auto name = get_as<std::string>(u, "name", "universe");
            NMC_VALIDATE(uids.emplace(name, UniverseId(labels.size())).second,
                         ConfigError,
                         << "duplicate universe name '" << name << "'");
            labels.push_back(name);
        }
    }

    // Embeddings
    std::map<std::string, Daughter> embeddings;
    if (doc.contains("embeddings"))
    {
        for (auto const& e : doc.at("embeddings"))
        {
            auto name = get_as<std::string>(e, "name", "embedding");
            std::string const where = "embedding '" + name + "'";
            auto uname = get_as<std::string>(e, "universe", where);
            auto it = uids.find(uname);
            NMC_VALIDATE(it != uids.end(),
                         ConfigError,
                         << where << ": unknown universe '" << uname << "'");
            Daughter d{it->second,
                       e.contains("translation")
                           ? get_real3(e, "translation", where)
                           : Real3{0, 0, 0}};
            NMC_VALIDATE(embeddings.emplace(name, d).second,
                         ConfigError,
                         << "duplicate embedding name '" << name << "'");
        }
    }
    auto resolve_fill = [&](std::string const& name, std::string const& where) {
        if (auto it = embeddings.find(name); it != embeddings.end())
        {
            return it->second;
        }
        auto it = uids.find(name);
        NMC_VALIDATE(it != uids.end(),
                     ConfigError,
                     << where << ": fill '" << name
                     << "' is neither an embedding nor a universe");
        return Daughter{it->second, {0, 0, 0}};
    };

    // CSG universes
    for (auto const& u : csg_defs)
    {
        auto const name = u.at("name").get<std::string>();
        std::string const where = "universe '" + name + "'";
        CsgUniverseBuilder builder;
        std::map<std::string, LocalSurfaceId> local;
        for (auto const& c : require(u, "cells", where))
        {
            CellDef cell;
            std::string const cwhere
                = where + " cell '" + get_or<std::string>(c, "name", "?", where) + "'";
            for (auto const& tok :
                 get_as<std::vector<std::string>>(c, "region", cwhere))
            {
                NMC_VALIDATE(tok.size() >= 2 && (tok[0] == '+' || tok[0] == '-'),
                             ConfigError,
                             << cwhere << ": region token '" << tok
                             << "' must be +name or -name");
                std::string const sname = tok.substr(1);
                auto sit = surfaces.find(sname);
                NMC_VALIDATE(sit != surfaces.end(),
                             ConfigError,
                             << cwhere << ": unknown surface '" << sname << "'");
                auto [lit, inserted] = local.insert({sname, {}});
                if (inserted)
                {
                    lit->second = builder.add_surface(sit->second);
                }
                cell.faces.push_back(
                    {lit->second, tok[0] == '+' ? Sense::positive : Sense::negative});
            }
            NMC_VALIDATE(c.contains("material") != c.contains("fill"),
                         ConfigError,
                         << cwhere << ": exactly one of 'material' and 'fill' is required");
            if (c.contains("material"))
            {
                auto mname = get_as<std::string>(c, "material", cwhere);
                auto mit = mat_ids.find(mname);
                NMC_VALIDATE(mit != mat_ids.end(),
                             ConfigError,
                             << cwhere << ": unknown material '" << mname << "'");
                cell.material = mit->second;
            }
            else
            {
                cell.daughter
                    = resolve_fill(get_as<std::string>(c, "fill", cwhere), cwhere);
            }
            try
            {
                builder.add_cell(std::move(cell));
            }
            catch (ContractViolation const& e)
            {
                NMC_VALIDATE(false, ConfigError, << cwhere << ": " << e.what());
            }
        }
        try
        {
            result.geometry.universes.emplace_back(std::move(builder).build());
        }
        catch (GeometryError const& e)
        {
            NMC_VALIDATE(false, ConfigError, << where << ": " << e.what());
        }
    }

    // Arrays
    for (auto const& a : array_defs)
    {
        auto const name = a.at("name").get<std::string>();
        std::string const where = "array '" + name + "'";
        auto const type = get_as<std::string>(a, "type", where);
        Placement const placement = parse_placement(a, where);
        if (type == "rect")
        {
            json const& e = require(a, "edges", where);
            RectGrid::EdgeArray edges{
                get_as<std::vector<real_type>>(e, "x", where),
                get_as<std::vector<real_type>>(e, "y", where),
                get_as<std::vector<real_type>>(e, "z", where)};
            RectGrid grid;
            try
            {
                grid = RectGrid(std::move(edges));
            }
            catch (ConfigError const& err)
            {
                NMC_VALIDATE(false, ConfigError, << where << ": " << err.what());
            }
            auto names = parse_fill(a, grid.num_cells(), where);
            std::vector<Daughter> fill;
            for (size_type i = 0; i < names.size(); ++i)
            {
                Daughter d = resolve_fill(names[i], where);
                if (placement == Placement::center)
                {
                    Ijk const ijk = grid.ijk(i);
                    for (int ax = 0; ax < 3; ++ax)
                    {
                        auto const ed = grid.edges(static_cast<Axis>(ax));
                        d.translation[ax]
                            += (ed[ijk[ax]] + ed[ijk[ax] + 1]) / 2;
                    }
                }
                fill.push_back(d);
            }
            result.geometry.universes.emplace_back(
                RectArrayUniverse(std::move(grid), std::move(fill)));
        }
        else if (type == "hex")
        {
            HexGridSpec spec;
            spec.pitch = get_as<real_type>(a, "pitch", where);
            auto orient = get_or<std::string>(a, "orientation", "flat_top", where);
            NMC_VALIDATE(orient == "flat_top" || orient == "pointy_top",
                         ConfigError,
                         << where << ": orientation must be flat_top or pointy_top");
            spec.orientation = orient == "flat_top" ? HexOrientation::flat_top
                                                    : HexOrientation::pointy_top;
            if (a.contains("rings"))
            {
                spec.cells = HexGridSpec::ring_layout(get_as<int>(a, "rings", where));
            }
            else
            {
                for (auto const& qr :
                     get_as<std::vector<std::array<int, 2>>>(a, "cells", where))
                {
                    spec.cells.push_back({qr[0], qr[1]});
                }
            }
            spec.edges_z = get_as<std::vector<real_type>>(a, "edges_z", where);
            NMC_VALIDATE(spec.edges_z.size() >= 2,
                         ConfigError,
                         << where << ": edges_z needs at least two values");
            auto const nhex = spec.cells.size();
            auto names = parse_fill(a, nhex * (spec.edges_z.size() - 1), where);
            for (size_type i = 0; i < names.size(); ++i)
            {
                Daughter d = resolve_fill(names[i], where);
                if (placement == Placement::center)
                {
                    Real3 const c = spec.center(spec.cells[i % nhex]);
                    size_type const k = i / nhex;
                    d.translation[0] += c[0];
                    d.translation[1] += c[1];
                    d.translation[2] += (spec.edges_z[k] + spec.edges_z[k + 1]) / 2;
                }
                spec.fill.push_back(d);
            }
            spec.validate();
            result.geometry.universes.emplace_back(std::move(spec));
        }
        else
        {
            NMC_VALIDATE(false,
                         ConfigError,
                         << where << ": unknown array type '" << type << "'");
        }
    }

    // Root and boundary
    auto root = get_as<std::string>(doc, "root", "model");
    auto rit = uids.find(root);
    NMC_VALIDATE(rit != uids.end(),
                 ConfigError,
                 << "root universe '" << root << "' is not defined");
    result.geometry.root = rit->second;
    if (doc.contains("boundary"))
    {
        static char const* const faces[] = {"x-", "x+", "y-", "y+", "z-", "z+"};
        json const& b = doc.at("boundary");
        if (b.is_string())
        {
            result.geometry.boundary.fill(parse_bc(b.get<std::string>(), "boundary"));
        }
        else
        {
            for (auto const& [key, val] : b.items())
            {
                int f = 0;
                while (f < 6 && key != faces[f])
                {
                    ++f;
                }
                NMC_VALIDATE(f < 6,
                             ConfigError,
                             << "boundary: unknown face '" << key << "'");
                result.geometry.boundary[f]
                    = parse_bc(val.get<std::string>(), "boundary");
            }
        }
    }

    result.run = parse_run(doc.contains("run") ? doc.at("run") : json());
    if (doc.contains("manifest"))
    {
        result.manifest = doc.at("manifest");
    }
    return result;
}

//---------------------------------------------------------------------------//
std::vector<MaterialData> build_materials(ModelInput const& model)
{
    std::vector<MaterialData> result;
    for (auto const& m : model.materials)
    {
        result.emplace_back(m);
    }
    return result;
}

//---------------------------------------------------------------------------//
ModelCounts count_model(GeometryInput const& geo)
{
    ModelCounts result;
    result.universes = geo.universes.size();
    for (auto const& u : geo.universes)
    {
        if (auto* csg = std::get_if<CsgUniverse>(&u))
        {
            result.cells += csg->num_cells();
            result.surfaces += csg->num_surfaces();
        }
        else if (auto* rect = std::get_if<RectArrayUniverse>(&u))
        {
            result.cells += rect->num_cells();
            result.surfaces += rect->num_surfaces();
        }
        else
        {
            auto const& hex = std::get<HexGridSpec>(u);
            result.cells += hex.num_cells();
            result.surfaces
                += to_pseudo_array_hex(hex, {false, {}}).num_surfaces();
        }
    }
    return result;
}

//---------------------------------------------------------------------------//
}  // namespace nestmc
