#pragma once

#include "versorlab/blade_key.hpp"
#include "versorlab/catalog.hpp"
#include "versorlab/cga2d.hpp"
#include "versorlab/error.hpp"
#include "versorlab/induction.hpp"
#include "versorlab/json_io.hpp"
#include "versorlab/mckay.hpp"
#include "versorlab/multivector.hpp"
#include "versorlab/root_system.hpp"
#include "versorlab/versor.hpp"
#include "versorlab/versor_group.hpp"
