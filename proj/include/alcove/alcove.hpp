#pragma once

#include "laurent.hpp"
#include "root_data.hpp"
#include "affine_weyl.hpp"
#include "group_algebra.hpp"
#include "parallel.hpp"
#include "walks.hpp"
#include "hecke.hpp"
#include "charalg.hpp"
#include "tableaux.hpp"
