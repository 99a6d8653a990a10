import logging

from celery import group, shared_task
from django.conf import settings

from djapps.fieldfit.fields import RiskField
from .flow import FlowTrajectory, flow


logger = logging.getLogger(__name__)


@shared_task
def flow_task(field_data, start, step, max_steps):
    field = RiskField.from_dict(field_data)
    return flow(field, tuple(start), step, max_steps).to_dict()


def batch_flow(field, starts, step=None, max_steps=None, use_celery=None):
    """
    Trajectories for many starts. Each trajectory is sequential; with
    RISK_FLOW_USE_CELERY they are dispatched as one Celery group and the
    results come back in start order.
    """
    step = settings.RISK_FLOW_STEP if step is None else step
    max_steps = settings.RISK_FLOW_MAX_STEPS if max_steps is None else max_steps
    use_celery = settings.RISK_FLOW_USE_CELERY if use_celery is None else use_celery
    if not use_celery:
        return [flow(field, start, step, max_steps) for start in starts]
    logger.info('Dispatching %d flow tasks', len(starts))
    job = group(flow_task.s(field.to_dict(), list(start), step, max_steps) for start in starts)
    return [FlowTrajectory.from_dict(data) for data in job.apply_async().get()]
