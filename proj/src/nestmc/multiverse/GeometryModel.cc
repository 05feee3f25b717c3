//------------------------------- -*- C++ -*- -------------------------------//
// Copyright nestmc contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file nestmc/multiverse/GeometryModel.cc
//---------------------------------------------------------------------------//
#include "GeometryModel.hh"

#include <cmath>
#include <iomanip>
#include <sstream>

#include "nestmc/arrays/PseudoArray.hh"

namespace nestmc
{
namespace
{
//---------------------------------------------------------------------------//
template<class F>
void for_each_daughter(UniverseDef const& def, F&& func)
{
    if (auto* csg = std::get_if<CsgUniverse>(&def))
    {
        for (auto const& cell : csg->cells())
        {
            if (cell.daughter)
            {
                func(*cell.daughter);
            }
        }
    }
    else if (auto* rect = std::get_if<RectArrayUniverse>(&def))
    {
        for (auto const& d : rect->fill())
        {
            func(d);
        }
    }
    else
    {
        for (auto const& d : std::get<HexGridSpec>(def).fill)
        {
            func(d);
        }
    }
}

//---------------------------------------------------------------------------//
/*!
 * Check daughter references and acyclicity; return the nesting depth.
 */
size_type validate_graph(GeometryInput const& input)
{
    auto const nu = input.universes.size();
    NMC_VALIDATE(nu > 0, ConfigError, << "geometry has no universes");
    NMC_VALIDATE(input.root && input.root.get() < nu,
                 ConfigError,
                 << "root universe ID is out of range");
    for (std::size_t u = 0; u < nu; ++u)
    {
        for_each_daughter(input.universes[u], [&](Daughter const& d) {
            NMC_VALIDATE(d.universe && d.universe.get() < nu,
                         ConfigError,
                         << "universe '" << input.label(UniverseId(u))
                         << "' references an undefined daughter universe");
            NMC_VALIDATE(is_finite(d.translation),
                         ConfigError,
                         << "universe '" << input.label(UniverseId(u))
                         << "' has a non-finite daughter translation");
        });
    }

    // Depth-first search with colors for cycle detection and depth
    enum Color : char
    {
        white,
        gray,
        black
    };
    std::vector<char> color(nu, white);
    std::vector<size_type> depth(nu, 0);
    auto visit = [&](auto&& self, std::size_t u) -> void {
        color[u] = gray;
        size_type d_max = 0;
        for_each_daughter(input.universes[u], [&](Daughter const& d) {
            auto const v = d.universe.get();
            NMC_VALIDATE(color[v] != gray,
                         ConfigError,
                         << "universe '" << input.label(UniverseId(v))
                         << "' is embedded in itself");
            if (color[v] == white)
            {
                self(self, v);
            }
            d_max = std::max(d_max, depth[v]);
        });
        depth[u] = d_max + 1;
        color[u] = black;
    };
    visit(visit, input.root.get());
    NMC_VALIDATE(depth[input.root.get()] <= max_levels,
                 ConfigError,
                 << "universe nesting depth " << depth[input.root.get()]
                 << " exceeds the maximum of " << max_levels);
    return depth[input.root.get()];
}

//---------------------------------------------------------------------------//
void check_strategy_support(GeometryInput const& input, Strategy s)
{
    if (s == Strategy::st)
    {
        return;
    }
    for (std::size_t u = 0; u < input.universes.size(); ++u)
    {
        NMC_VALIDATE(
            !std::holds_alternative<HexGridSpec>(input.universes[u]),
            UnsupportedError,
            << "strategy '" << to_cstring(s)
            << "' does not support hexagonal array universe '"
            << input.label(UniverseId(u))
            << "': only the single-tracker strategy (st) handles hex arrays");
    }
}

//---------------------------------------------------------------------------//
std::vector<Surface> rect_surfaces(RectGrid const& grid)
{
    std::vector<Surface> result;
    for (auto ax : {Axis::x, Axis::y, Axis::z})
    {
        for (real_type e : grid.edges(ax))
        {
            switch (ax)
            {
                case Axis::x:
                    result.push_back(PlaneX{e});
                    break;
                case Axis::y:
                    result.push_back(PlaneY{e});
                    break;
                default:
                    result.push_back(PlaneZ{e});
            }
        }
    }
    return result;
}

//---------------------------------------------------------------------------//
bool is_universe_boundary(GeometryParams const& p,
                          UniverseId u,
                          LocalSurfaceId s)
{
    if (p.types[u.get()] == UType::csg)
    {
        return p.csg_universe(u).is_boundary(s);
    }
    auto const& grid = p.rect_universe(u).grid();
    auto const [ax, edge] = grid.surface_edge(s);
    return edge == 0 || edge + 1 == grid.num_edges(ax);
}

//---------------------------------------------------------------------------//
//! Surface IDs bounding one cell of a universe
std::vector<LocalSurfaceId>
cell_faces(GeometryParams const& p, UniverseId u, LocalCellId c)
{
    std::vector<LocalSurfaceId> result;
    if (p.types[u.get()] == UType::csg)
    {
        for (auto const& f : p.csg_universe(u).cell(c).faces)
        {
            result.push_back(f.surface);
        }
        return result;
    }
    auto const& grid = p.rect_universe(u).grid();
    Ijk const ijk = grid.ijk(c.get());
    for (auto ax : {Axis::x, Axis::y, Axis::z})
    {
        result.push_back(grid.edge_surface(ax, ijk[to_int(ax)]));
        result.push_back(grid.edge_surface(ax, ijk[to_int(ax)] + 1));
    }
    return result;
}

//---------------------------------------------------------------------------//
void validate_rtk(GeometryParams const& p)
{
    auto label = [&p](UniverseId u) { return p.labels[u.get()]; };
    UniverseId const root = p.root;
    NMC_VALIDATE(p.types[root.get()] == UType::rect_array,
                 UnsupportedError,
                 << "strategy 'rtk' requires the root universe '"
                 << label(root) << "' to be a rectilinear array");
    for (auto const& core_d : p.rect_universe(root).fill())
    {
        UniverseId const assm = core_d.universe;
        NMC_VALIDATE(p.types[assm.get()] == UType::rect_array,
                     UnsupportedError,
                     << "strategy 'rtk' requires core daughter '"
                     << label(assm) << "' to be a rectilinear array");
        for (auto const& assm_d : p.rect_universe(assm).fill())
        {
            UniverseId const pin = assm_d.universe;
            NMC_VALIDATE(p.types[pin.get()] == UType::csg,
                         UnsupportedError,
                         << "strategy 'rtk' requires assembly daughter '"
                         << label(pin) << "' to be a CSG pin universe");
            auto const& csg = p.csg_universe(pin);
            std::optional<std::array<real_type, 2>> axis;
            for (auto const& s : csg.surfaces())
            {
                if (auto* cyl = std::get_if<CylinderZ>(&s))
                {
                    std::array<real_type, 2> const xy{cyl->x0, cyl->y0};
                    if (!axis)
                    {
                        axis = xy;
                    }
                    NMC_VALIDATE(std::fabs((*axis)[0] - xy[0]) <= 1e-9
                                     && std::fabs((*axis)[1] - xy[1]) <= 1e-9,
                                 UnsupportedError,
                                 << "strategy 'rtk' requires concentric "
                                    "cylinders in pin universe '"
                                 << label(pin) << "'");
                    continue;
                }
                NMC_VALIDATE(plane_axis(s),
                             UnsupportedError,
                             << "strategy 'rtk' does not support "
                             << type_name(s) << " surfaces in pin universe '"
                             << label(pin) << "'");
            }
            for (auto const& cell : csg.cells())
            {
                NMC_VALIDATE(!cell.daughter,
                             UnsupportedError,
                             << "strategy 'rtk' requires pin universe '"
                             << label(pin) << "' to contain only materials");
            }
        }
    }
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
char const* to_cstring(Strategy s)
{
    switch (s)
    {
        case Strategy::dp:
            return "dp";
        case Strategy::sp:
            return "sp";
        case Strategy::st:
            return "st";
        case Strategy::rtk:
            return "rtk";
    }
    return "?";
}

Strategy strategy_from_string(std::string_view s)
{
    for (auto st : {Strategy::dp, Strategy::sp, Strategy::st, Strategy::rtk})
    {
        if (s == to_cstring(st))
        {
            return st;
        }
    }
    NMC_VALIDATE(false,
                 ConfigError,
                 << "unknown strategy '" << s
                 << "' (expected dp, sp, st, or rtk)");
    return Strategy::dp;
}

//---------------------------------------------------------------------------//
std::vector<Surface>
universe_surfaces(GeometryParams const& params, UniverseId u)
{
    if (params.types[u.get()] == UType::csg)
    {
        auto s = params.csg_universe(u).surfaces();
        return {s.begin(), s.end()};
    }
    return rect_surfaces(params.rect_universe(u).grid());
}

//---------------------------------------------------------------------------//
/*!
 * A daughter boundary surface is coincident when, in every placement of the
 * daughter, its translated geometry matches a face of the enclosing cell.
 */
std::vector<std::vector<char>>
find_coincident_surfaces(GeometryParams const& params)
{
    auto const nu = params.num_universes();
    std::vector<std::vector<Surface>> surfaces(nu);
    for (std::size_t u = 0; u < nu; ++u)
    {
        surfaces[u] = universe_surfaces(params, UniverseId(u));
    }
    std::vector<size_type> instances(nu, 0);
    std::vector<std::vector<size_type>> hits(nu);
    for (std::size_t u = 0; u < nu; ++u)
    {
        hits[u].assign(surfaces[u].size(), 0);
    }

    for (std::size_t p = 0; p < nu; ++p)
    {
        UniverseId const parent(p);
        bool const is_csg = params.types[p] == UType::csg;
        size_type const ncells
            = is_csg ? params.csg_universe(parent).num_cells()
                     : params.rect_universe(parent).num_cells();
        for (size_type c = 0; c < ncells; ++c)
        {
            Daughter const* d = nullptr;
            if (is_csg)
            {
                auto const& cell = params.csg_universe(parent).cell(LocalCellId(c));
                d = cell.daughter ? &*cell.daughter : nullptr;
            }
            else
            {
                d = &params.rect_universe(parent).daughter(LocalCellId(c));
            }
            if (!d)
            {
                continue;
            }
            auto const du = d->universe.get();
            ++instances[du];
            auto const faces = cell_faces(params, parent, LocalCellId(c));
            for (size_type s = 0; s < surfaces[du].size(); ++s)
            {
                if (!is_universe_boundary(params, d->universe, LocalSurfaceId(s)))
                {
                    continue;
                }
                Surface const ts = translated(surfaces[du][s], d->translation);
                for (auto f : faces)
                {
                    if (soft_equal(ts, surfaces[p][f.get()]))
                    {
                        ++hits[du][s];
                        break;
                    }
                }
            }
        }
    }

    std::vector<std::vector<char>> result(nu);
    for (std::size_t u = 0; u < nu; ++u)
    {
        result[u].resize(surfaces[u].size(), 0);
        for (std::size_t s = 0; s < surfaces[u].size(); ++s)
        {
            result[u][s] = instances[u] > 0 && hits[u][s] == instances[u];
        }
    }
    return result;
}

//---------------------------------------------------------------------------//
GeometryParams build_geometry_params(GeometryInput const& input, Strategy s)
{
    GeometryParams p;
    p.depth = validate_graph(input);
    check_strategy_support(input, s);

    auto const nu = input.universes.size();
    p.root = input.root;
    for (std::size_t u = 0; u < nu; ++u)
    {
        UniverseId const uid(u);
        p.labels.push_back(input.label(uid));
        UniverseDef const& def = input.universes[u];
        if (auto* csg = std::get_if<CsgUniverse>(&def))
        {
            p.types.push_back(UType::csg);
            p.type_index.push_back(p.csg.size());
            p.csg.push_back(*csg);
        }
        else if (auto* rect = std::get_if<RectArrayUniverse>(&def))
        {
            if (s == Strategy::st)
            {
                p.types.push_back(UType::csg);
                p.type_index.push_back(p.csg.size());
                p.csg.push_back(to_pseudo_array_rect(*rect));
            }
            else
            {
                p.types.push_back(UType::rect_array);
                p.type_index.push_back(p.rect.size());
                p.rect.push_back(*rect);
            }
        }
        else
        {
            auto const& hex = std::get<HexGridSpec>(def);
            NMC_ASSERT(s == Strategy::st);
            p.types.push_back(UType::csg);
            p.type_index.push_back(p.csg.size());
            p.csg.push_back(to_pseudo_array_hex(hex));
        }

        size_type const ncells = p.types.back() == UType::csg
                                     ? p.csg.back().num_cells()
                                     : p.rect.back().num_cells();
        p.cell_offsets.push_back(p.num_flat_cells);
        p.num_flat_cells += ncells;
        for (size_type c = 0; c < ncells; ++c)
        {
            p.mapping.push_back(
                {uid, LocalCellId(c), uid, LocalCellId(c)});
        }
    }

    p.coincident = find_coincident_surfaces(p);

    if (s == Strategy::rtk)
    {
        NMC_VALIDATE(p.depth == 3,
                     UnsupportedError,
                     << "strategy 'rtk' requires exactly three universe "
                        "levels, but '"
                     << p.labels[p.root.get()] << "' nests "
                     << p.depth);
        validate_rtk(p);
    }

    // Root boundary conditions
    auto const root_surfaces = universe_surfaces(p, p.root);
    p.root_bbox = p.types[p.root.get()] == UType::csg
                      ? p.csg_universe(p.root).bbox()
                      : p.rect_universe(p.root).bbox();
    std::array<bool, 6> face_used{};
    p.root_surfaces.resize(root_surfaces.size());
    for (size_type i = 0; i < root_surfaces.size(); ++i)
    {
        RootSurface& rs = p.root_surfaces[i];
        rs.boundary = is_universe_boundary(p, p.root, LocalSurfaceId(i));
        auto ax = plane_axis(root_surfaces[i]);
        if (!rs.boundary || !ax)
        {
            continue;
        }
        real_type const x = *plane_position(root_surfaces[i]);
        int const a = to_int(*ax);
        for (int side = 0; side < 2; ++side)
        {
            real_type const face = side ? p.root_bbox.hi[a] : p.root_bbox.lo[a];
            if (std::fabs(x - face) <= 1e-9 * std::max<real_type>(1, std::fabs(face)))
            {
                rs.bc = input.boundary[2 * a + side];
                rs.axis = *ax;
                face_used[2 * a + side] = true;
            }
        }
    }
    static char const* const face_names[]
        = {"x-", "x+", "y-", "y+", "z-", "z+"};
    for (int f = 0; f < 6; ++f)
    {
        NMC_VALIDATE(input.boundary[f] == BoundaryCondition::vacuum
                         || face_used[f],
                     ConfigError,
                     << "reflecting boundary on face " << face_names[f]
                     << " requires an axis-aligned root boundary plane there");
    }
    return p;
}

//---------------------------------------------------------------------------//
// GEOMETRY MODEL
//---------------------------------------------------------------------------//
GeometryModel::GeometryModel(GeometryInput const& input, Strategy strategy)
    : strategy_(strategy)
    , params_(std::make_shared<GeometryParams>(
          build_geometry_params(input, strategy)))
{
    GeometryParams const& p = *params_;
    switch (strategy)
    {
        case Strategy::dp:
            navigator_ = std::make_shared<Navigator>(
                std::in_place_type<DpNavigator>, p);
            break;
        case Strategy::sp:
            navigator_ = std::make_shared<Navigator>(
                std::in_place_type<SpNavigator>, p);
            break;
        case Strategy::st:
            navigator_ = std::make_shared<Navigator>(
                std::in_place_type<StNavigator>, p);
            break;
        case Strategy::rtk:
            navigator_ = std::make_shared<Navigator>(
                std::in_place_type<RtkNavigator>, p);
            break;
    }
}

//---------------------------------------------------------------------------//
GeoState GeometryModel::find_cell(Real3 const& pos, Real3 const& dir) const
{
    GeoState state;
    auto status = this->initialize(state, pos, dir);
    NMC_VALIDATE(state.num_levels > 0,
                 GeometryError,
                 << "position (" << pos[0] << ',' << pos[1] << ',' << pos[2]
                 << ") is outside the root universe");
    NMC_VALIDATE(status == TrackStatus::ok,
                 GeometryError,
                 << "no cell contains (" << pos[0] << ',' << pos[1] << ','
                 << pos[2] << ") at level " << state.num_levels);
    return state;
}

TrackStatus GeometryModel::initialize(GeoState& state,
                                      Real3 const& pos,
                                      Real3 const& dir) const
{
    return this->visit(
        [&](auto const& nav) { return nav.initialize(state, pos, dir); });
}

bool GeometryModel::find_next_step(GeoState& state) const
{
    return this->visit(
        [&](auto const& nav) { return nav.find_next_step(state); });
}

void GeometryModel::move_within_cell(GeoState& state, real_type d) const
{
    NavigatorBase::move_within_cell(state, d);
}

void GeometryModel::move_to_surface(GeoState& state) const
{
    NavigatorBase::move_to_surface(state);
}

TrackStatus GeometryModel::cross_surface(GeoState& state) const
{
    return this->visit(
        [&](auto const& nav) { return nav.cross_surface(state); });
}

void GeometryModel::change_direction(GeoState& state, Real3 const& dir) const
{
    NavigatorBase::change_direction(state, dir);
}

MaterialId GeometryModel::material(GeoState const& state) const
{
    return this->visit([&](auto const& nav) { return nav.material(state); });
}

size_type GeometryModel::flat_cell(GeoState const& state) const
{
    LevelState const& lev = state.bottom();
    return params_->flat_cell(lev.universe, lev.cell);
}

//---------------------------------------------------------------------------//
std::string GeometryModel::dump(GeoState const& state) const
{
    std::ostringstream os;
    os << std::setprecision(17);
    auto vec = [&os](Real3 const& v) {
        os << '(' << v[0] << ',' << v[1] << ',' << v[2] << ')';
    };
    os << "pos=";
    vec(state.pos);
    os << " dir=";
    vec(state.dir);
    os << '\n';
    for (size_type i = 0; i < state.num_levels; ++i)
    {
        auto const& lev = state.levels[i];
        os << "level " << i << ": universe '"
           << params_->labels[lev.universe.get()] << "' ("
           << to_cstring(params_->types[lev.universe.get()]) << ") cell "
           << lev.cell.get() << " translation=";
        vec(lev.translation);
        os << '\n';
    }
    if (state.next_surface)
    {
        os << "next: level " << state.next_surface->level << " surface "
           << state.next_surface->surface.get() << " sense "
           << to_char(state.next_surface->sense) << " distance "
           << state.next_distance << '\n';
    }
    if (state.outside)
    {
        os << "outside\n";
    }
    return os.str();
}

//---------------------------------------------------------------------------//
}  // namespace nestmc
