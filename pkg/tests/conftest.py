import pytest

from spintunnel.spin_models import Fe8, Lipkin, Mn12, to_spin_params


@pytest.fixture
def mn12():
    return Mn12(D=0.6, S=10, h=0.0)


@pytest.fixture
def fe8():
    return Fe8(D=0.275, E=0.046, S=10)


@pytest.fixture
def lipkin():
    return Lipkin(chi=1.5, Ns=20)


@pytest.fixture
def params(mn12, fe8, lipkin):
    return {"mn12": to_spin_params(mn12), "fe8": to_spin_params(fe8), "lipkin": to_spin_params(lipkin)}
